#pragma once

#include "senslab/ball_advice.hpp"
#include "senslab/binomial.hpp"
#include "senslab/corpus.hpp"
#include "senslab/counting.hpp"
#include "senslab/errors.hpp"
#include "senslab/evaluate.hpp"
#include "senslab/families.hpp"
#include "senslab/io.hpp"
#include "senslab/measures.hpp"
#include "senslab/noise.hpp"
#include "senslab/point.hpp"
#include "senslab/rational.hpp"
#include "senslab/reconstruct.hpp"
#include "senslab/rng.hpp"
#include "senslab/selfcorrect.hpp"
#include "senslab/truth_table.hpp"
#include "senslab/verify.hpp"
