#ifndef NERC_NERC_HPP
#define NERC_NERC_HPP

#include "nerc/classifier.hpp"
#include "nerc/corpus.hpp"
#include "nerc/errors.hpp"
#include "nerc/evaluation.hpp"
#include "nerc/model_io.hpp"
#include "nerc/pipeline.hpp"
#include "nerc/sparse.hpp"
#include "nerc/tagset.hpp"
#include "nerc/unicode.hpp"
#include "nerc/vectorizer.hpp"

#endif  // NERC_NERC_HPP
