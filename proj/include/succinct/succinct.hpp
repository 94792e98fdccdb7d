#pragma once

#include "succinct/bounds.hpp"
#include "succinct/compile.hpp"
#include "succinct/constants.hpp"
#include "succinct/crosscheck.hpp"
#include "succinct/dfa.hpp"
#include "succinct/error.hpp"
#include "succinct/evaluate.hpp"
#include "succinct/fo_generators.hpp"
#include "succinct/formula.hpp"
#include "succinct/formula_io.hpp"
#include "succinct/fragment.hpp"
#include "succinct/mso_generators.hpp"
#include "succinct/properties.hpp"
#include "succinct/random.hpp"
#include "succinct/set_oracle.hpp"
#include "succinct/types.hpp"
#include "succinct/word.hpp"
