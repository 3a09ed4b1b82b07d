#pragma once

#include "mmseg/script.hpp"
#include "mmseg/segmenter.hpp"
#include "mmseg/patterns.hpp"
#include "mmseg/corpus_io.hpp"
#include "mmseg/evaluation.hpp"
