#pragma once

#include "bvmirror/error.hpp"
#include "bvmirror/rational.hpp"
#include "bvmirror/polynomial.hpp"
#include "bvmirror/branch_config.hpp"
#include "bvmirror/superelliptic.hpp"
#include "bvmirror/kodaira.hpp"
#include "bvmirror/fixed_locus.hpp"
#include "bvmirror/borcea_voisin.hpp"
