#ifndef QUICKSUM_QUICKSUM_HPP
#define QUICKSUM_QUICKSUM_HPP

#include "quicksum/classify.hpp"
#include "quicksum/defaults.hpp"
#include "quicksum/error.hpp"
#include "quicksum/lexicon.hpp"
#include "quicksum/morphology.hpp"
#include "quicksum/pipeline.hpp"
#include "quicksum/render.hpp"
#include "quicksum/scoring.hpp"
#include "quicksum/segmenter.hpp"

#endif  // QUICKSUM_QUICKSUM_HPP
