#pragma once

#include <exception>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathgraph {

enum class RejectReason {
  NonChordal,
  FullAntipodalTriangle,
  PartitionFailure,
  ColoringConflict,
  CrossPairConflict,
  UpperNotBipartite,
  UpperColorConflict,
};

std::string_view to_string(RejectReason reason);

/// Why and where a recognizer said "no". Vertex ids are those of the graph
/// handed to the recognizer; components are named gamma1, gamma2, ... in
/// the order of the separator trace.
struct Rejection {
  RejectReason reason = RejectReason::NonChordal;
  std::string stage;
  std::string detail;
  std::vector<int> separator;  ///< empty for the chordality test
  int depth = -1;
  std::vector<int> vertices;   ///< vertices the detail refers to
};

/// Carries a Rejection out of the per-separator stages; the recognizers
/// catch it and return it as a value.
class RejectSignal : public std::exception {
 public:
  explicit RejectSignal(Rejection r) : rejection_(std::move(r)), what_(rejection_.stage + ": " + rejection_.detail) {}
  const Rejection& rejection() const noexcept { return rejection_; }
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  Rejection rejection_;
  std::string what_;
};

[[noreturn]] inline void reject(RejectReason reason, std::string stage, std::string detail,
                                std::vector<int> vertices = {}) {
  throw RejectSignal(Rejection{reason, std::move(stage), std::move(detail), {}, -1, std::move(vertices)});
}

inline std::string component_name(int id) { return "gamma" + std::to_string(id + 1); }

/// A broken internal invariant: a bug, never a verdict about the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pathgraph
