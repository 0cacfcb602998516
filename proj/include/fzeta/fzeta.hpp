#ifndef FZETA_FZETA_HPP
#define FZETA_FZETA_HPP

// Everything except the JSON encoders (fzeta/json.hpp), which need nlohmann/json.

#include <fzeta/arith.hpp>
#include <fzeta/bigrat.hpp>
#include <fzeta/carlitz.hpp>
#include <fzeta/classical.hpp>
#include <fzeta/digit_perm.hpp>
#include <fzeta/error.hpp>
#include <fzeta/fq.hpp>
#include <fzeta/hasse.hpp>
#include <fzeta/laurent.hpp>
#include <fzeta/measures.hpp>
#include <fzeta/padic.hpp>
#include <fzeta/poly.hpp>
#include <fzeta/ratfun.hpp>
#include <fzeta/rings.hpp>
#include <fzeta/scan.hpp>
#include <fzeta/verify.hpp>
#include <fzeta/zeros.hpp>
#include <fzeta/zeta.hpp>

#endif
