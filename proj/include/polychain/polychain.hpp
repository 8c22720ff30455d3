#ifndef POLYCHAIN_POLYCHAIN_HPP
#define POLYCHAIN_POLYCHAIN_HPP

#include "polychain/rational.hpp"
#include "polychain/chain.hpp"
#include "polychain/index.hpp"
#include "polychain/index_io.hpp"
#include "polychain/dp.hpp"
#include "polychain/classify.hpp"
#include "polychain/oracle.hpp"
#include "polychain/cross_check.hpp"
#include "polychain/azi.hpp"

#endif  // POLYCHAIN_POLYCHAIN_HPP
