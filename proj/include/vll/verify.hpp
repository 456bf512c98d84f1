// The acceptance suite: exhaustive bounded checks over the decidable
// ingredients, with a JSON report.

#ifndef VLL_VERIFY_HPP_
#define VLL_VERIFY_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vll {

  struct Profile {
    std::string   name;
    //! Criterion-versus-model scans use words up to this length.
    std::size_t   word_length;
    std::uint32_t letters;
    //! G-set sweeps enumerate congruences on carriers up to this size.
    std::size_t max_carrier;

    static Profile quick() {
      return {"quick", 4, 3, 8};
    }
    static Profile full() {
      return {"full", 5, 3, 12};
    }
  };

  //! "quick" or "full"; std::invalid_argument otherwise.
  Profile profile_named(std::string_view name);

  //! The named profile, unless the environment variable VLL_BUDGET names
  //! another one.
  Profile resolve_profile(std::string_view requested);

  enum class Status { pass, fail, unknown };

  std::string to_string(Status s);

  struct CheckOutcome {
    std::string id;
    std::string title;
    Status      status = Status::unknown;
    //! Replayable evidence for a failure; empty on a pass.
    std::string witness;
    //! One-line human summary of what was checked.
    std::string                summary;
    std::chrono::milliseconds  millis{0};
    std::chrono::milliseconds  limit{0};
  };

  struct Check {
    std::string               id;
    std::string               title;
    std::chrono::milliseconds limit;
    //! Fills status, witness and summary; timing is added by run_check.
    std::function<void(Profile const&, CheckOutcome&)> body;
  };

  //! AC1 to AC9 followed by the supplementary G-set sweep.
  std::vector<Check> acceptance_checks();

  //! Runs one check; an exception or exceeding the time limit is a fail.
  CheckOutcome run_check(Check const& check, Profile const& profile);

  struct Report {
    std::string               suite;
    std::string               profile;
    std::vector<CheckOutcome> checks;

    bool passed() const;
  };

  //! Runs every check whose id is in only (all of them when only is empty),
  //! calling progress after each.
  Report run_suite(
      Profile const&                                  profile,
      std::vector<std::string> const&                 only     = {},
      std::function<void(CheckOutcome const&)> const& progress = {});

  //! {suite, profile, checks: [{id, status, witness?, millis}]}
  std::string to_json(Report const& report, int indent = 2);

}  // namespace vll

#endif  // VLL_VERIFY_HPP_
