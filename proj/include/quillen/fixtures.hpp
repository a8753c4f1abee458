#pragma once

#include "quillen/atlas.hpp"

namespace quillen {

// Small classical groups used as fixtures across tests and verify suites.
LabeledGroup make_cyclic(std::uint32_t n);
LabeledGroup make_dihedral(std::uint32_t order); // order = 2m
LabeledGroup make_sym(std::uint32_t n);
LabeledGroup make_alt(std::uint32_t n);
LabeledGroup make_frobenius20();
LabeledGroup make_quaternion8();
LabeledGroup make_c2_wr_c3(); // (C2 x C2 x C2) : C3, order 24
LabeledGroup make_s3_wr_c2(); // (S3 x S3) : C2, order 72
LabeledGroup make_sl2_5();    // 2.Alt5 acting on the 24 nonzero vectors of GF(5)^2

} // namespace quillen
