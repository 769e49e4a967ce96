#pragma once

#include "bnpoly/backtrack.hpp"
#include "bnpoly/constructions.hpp"
#include "bnpoly/coxeter_bn.hpp"
#include "bnpoly/cycle_notation.hpp"
#include "bnpoly/generator_file.hpp"
#include "bnpoly/group.hpp"
#include "bnpoly/normal.hpp"
#include "bnpoly/oracle.hpp"
#include "bnpoly/permutation.hpp"
#include "bnpoly/report.hpp"
#include "bnpoly/stabilizer_chain.hpp"
#include "bnpoly/theorem.hpp"
#include "bnpoly/verifier.hpp"
