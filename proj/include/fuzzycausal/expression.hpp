#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fuzzycausal {

/// Arithmetic over previously assigned variables: constants, variable
/// references, + - *, integer powers via ^, and division by a nonzero
/// constant. Covers every structural equation used by the library
/// (polynomials with interactions plus constant rescaling).
class Expression {
 public:
  Expression() = default;

  /// Parses `text` where identifiers must come from `variables` (the
  /// variables assigned earlier in the model). Empty text parses as 0.
  static Expression parse(const std::string& text,
                          const std::vector<std::string>& variables);

  /// Evaluates against values positionally matching the `variables` given
  /// at parse time.
  double evaluate(std::span<const double> values) const;

  const std::string& text() const noexcept { return text_; }
  bool empty() const noexcept { return root_ == nullptr; }

  struct Node;  // implementation detail, public for the parser

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace fuzzycausal
