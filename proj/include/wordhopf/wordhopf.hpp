#ifndef WORDHOPF_WORDHOPF_HPP
#define WORDHOPF_WORDHOPF_HPP

#include "wordhopf/freemod.hpp"
#include "wordhopf/word.hpp"
#include "wordhopf/format.hpp"
#include "wordhopf/hopf.hpp"
#include "wordhopf/mpr.hpp"
#include "wordhopf/dwha.hpp"
#include "wordhopf/wha.hpp"
#include "wordhopf/shuffle_lie.hpp"
#include "wordhopf/nsq.hpp"
#include "wordhopf/descent.hpp"
#include "wordhopf/icc.hpp"

#endif  // WORDHOPF_WORDHOPF_HPP
