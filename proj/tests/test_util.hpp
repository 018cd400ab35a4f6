#pragma once

#include <vector>

#include "doctest.h"
#include "rankvsm/error.hpp"
#include "rankvsm/text_pipeline.hpp"
#include "rankvsm/vector_space.hpp"

namespace rankvsm::test {

/// Runs `f` and returns the code of the rankvsm::Error it throws.
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected rankvsm::Error");
  return ErrorCode::kInvalidArgument;
}

/// The two lemmatized sentences of the worked example, pre-tokenized.
inline const std::vector<CorpusInput>& example_lines() {
  static const std::vector<CorpusInput> lines{
      {"d1", "john have ask mary marry before leave"},
      {"d2", "before leave mary ask john his wife"},
  };
  return lines;
}

inline Corpus example_corpus() {
  PipelineConfig c;
  c.pretokenized = true;
  return build_corpus(example_lines(), c);
}

}  // namespace rankvsm::test
