#pragma once

// The end-to-end verification run for one prime and its JSON / Markdown
// renderings.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roquette/character.hpp"

namespace roquette {

inline constexpr const char* kSchemaVersion = "1.0.0";
inline constexpr const char* kToolVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  /// The mathematical statement the check certifies.
  std::string claim;
  /// What was computed.
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct OrderCount {
  std::uint64_t order = 0;
  std::uint64_t count = 0;
  friend bool operator==(const OrderCount&, const OrderCount&) = default;
};

struct GroupSummary {
  std::uint64_t order = 0;
  std::uint64_t expected_order = 0;
  std::uint64_t class_count = 0;
  std::vector<OrderCount> order_statistics;
  std::uint64_t pgl_kernel_size = 0;
  bool pgl_sharply_3_transitive = false;
  std::uint64_t order_p_classes = 0;
  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct CurveSummary {
  int genus = 0;
  std::uint64_t points_fp = 0;
  std::uint64_t expected_fp = 0;
  std::uint64_t points_fp2 = 0;
  std::uint64_t expected_fp2 = 0;
  std::int64_t deviation = 0;
  std::int64_t bound = 0;
  bool sharp = false;
  int epsilon = 0;
  int epsilon_from_congruence = 0;
  /// Elements checked for the action law and for preserving C(F_{p^2}).
  std::uint64_t action_pairs_checked = 0;
  friend bool operator==(const CurveSummary&, const CurveSummary&) = default;
};

struct ClassRow {
  std::array<std::uint16_t, 4> matrix{};
  std::uint16_t lambda_log = 0;
  std::uint64_t element_order = 0;
  std::uint64_t size = 0;
  Rational value{0};
  friend bool operator==(const ClassRow&, const ClassRow&) = default;
};

struct WildMultiplicity {
  std::uint32_t u = 0;
  int lambda_sign = 1;
  int multiplicity = 0;
  friend bool operator==(const WildMultiplicity&, const WildMultiplicity&) = default;
};

struct CharacterSummary {
  std::vector<ClassRow> classes;
  Rational inner_product{0};
  Rational n_chi{0};
  Rational sylow_trivial{0};
  Rational sylow_nontrivial{0};
  Rational fs_indicator{0};
  std::uint64_t kernel_size = 0;
  bool iota_twist = false;
  std::vector<WildMultiplicity> wild;
  friend bool operator==(const CharacterSummary&, const CharacterSummary&) = default;
};

struct EllWitness {
  std::uint32_t ell = 0;
  int m = 0;
  int field_degree = 0;
  /// #J(F_{p^{2m}}) in decimal.
  std::string jacobian_order;
  std::uint64_t span_size = 0;
  std::uint64_t expected_span = 0;
  int samples = 0;
  /// Trace on each class, in [0, l).
  std::vector<std::uint32_t> traces;
  bool congruent = false;
  friend bool operator==(const EllWitness&, const EllWitness&) = default;
};

struct EllSummary {
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;
  std::vector<std::uint32_t> moduli;
  std::vector<EllWitness> witnesses;
  std::vector<std::int64_t> crt;
  bool crt_matches = false;
  friend bool operator==(const EllSummary&, const EllSummary&) = default;
};

struct TimingEntry {
  std::string stage;
  std::int64_t microseconds = 0;
  friend bool operator==(const TimingEntry&, const TimingEntry&) = default;
};

struct VerificationReport {
  std::string schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  std::uint64_t ell_bound = 0;
  int precision = 0;

  GroupSummary group;
  CurveSummary curve;
  CharacterSummary character;
  EllSummary ell;
  std::vector<CheckResult> checks;
  /// Steps of the argument that are cited rather than computed.
  std::vector<std::string> inferences;
  ObstructionVerdict verdict;
  /// "obstructed" or "not determined".
  std::string final_verdict;
  /// Empty unless timings were requested.
  std::vector<TimingEntry> timings;

  const CheckResult* find_check(const std::string& id) const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct PipelineOptions {
  /// Explicit l list; the default list is used when absent.
  std::optional<std::vector<std::uint32_t>> ells;
  std::uint64_t ell_bound = 10'000;
  std::uint64_t seed = 1;
  /// Series precision; 0 selects 2p + 4.
  int precision = 0;
  std::uint32_t max_prime = 13;
  bool timings = false;
  /// Forces the named check to fail; used to test that every check gates the
  /// verdict.
  std::optional<std::string> inject_failure;
};

/// Identifiers of every check, in report order.
const std::vector<std::string>& check_ids();

/// Throws std::invalid_argument for unusable arguments (p not a prime >= 5,
/// bad l list) and ResourceLimitError when p exceeds options.max_prime or a
/// requested l is out of reach.
void validate_options(std::uint32_t p, const PipelineOptions& options);

VerificationReport run_pipeline(std::uint32_t p, const PipelineOptions& options = {});

/// "obstructed" when no check failed and the obstruction verdict says so.
std::string derive_final_verdict(const VerificationReport& report);

/// Marks check `id` failed and recomputes the final verdict. Throws
/// std::invalid_argument for an unknown id.
void inject_failure(VerificationReport& report, const std::string& id);

std::string emit_json(const VerificationReport& report);
std::string emit_markdown(const VerificationReport& report);
/// Inverse of emit_json. Throws std::invalid_argument on malformed input.
VerificationReport report_from_json(const std::string& text);

/// 0 when obstructed, 1 otherwise.
int exit_code(const VerificationReport& report);

}  // namespace roquette
