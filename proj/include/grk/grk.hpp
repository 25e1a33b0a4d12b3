#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "weight.hpp"
#include "laurent.hpp"
#include "ratfunc.hpp"
#include "root_datum.hpp"
#include "weyl.hpp"
#include "context.hpp"
#include "parse.hpp"
#include "smash.hpp"
#include "grclass.hpp"
#include "si_sl2.hpp"
#include "qk.hpp"
#include "verify.hpp"
#include "session.hpp"
