#pragma once

#include "bernoulli.hpp"
#include "closed_forms.hpp"
#include "compositions.hpp"
#include "cyclotomic.hpp"
#include "harmonic.hpp"
#include "io.hpp"
#include "numeric.hpp"
#include "power_series.hpp"
#include "random_words.hpp"
#include "rational.hpp"
#include "s_map.hpp"
#include "verify.hpp"
#include "word.hpp"
