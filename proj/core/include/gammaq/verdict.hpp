#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gammaq {

  // Outcome of comparing the two sides of a biconditional, or of checking a
  // conclusion under a hypothesis (then lhs is the hypothesis, rhs the
  // conclusion, and vacuous means the hypothesis did not apply).
  struct Verdict {
    bool        lhs     = false;
    bool        rhs     = false;
    bool        vacuous = false;
    std::string witness;

    bool agrees() const noexcept {
      return vacuous || lhs == rhs;
    }

    static Verdict vacuous_case(std::string why = {}) {
      return Verdict{true, true, true, std::move(why)};
    }

    static Verdict holds(bool ok, std::string witness = {}) {
      return Verdict{true, ok, false, std::move(witness)};
    }
  };

  // Running count over many verdicts; invariant agreements + |discrepancies|
  // == cases.
  struct Tally {
    std::size_t              cases      = 0;
    std::size_t              agreements = 0;
    std::size_t              vacuous    = 0;
    std::vector<std::string> discrepancies;

    void record(Verdict const& v, std::string const& context = {}) {
      ++cases;
      if (v.vacuous) {
        ++vacuous;
      }
      if (v.agrees()) {
        ++agreements;
      } else {
        discrepancies.push_back(
            context.empty() ? v.witness : context + ": " + v.witness);
      }
    }

    void record_failure(std::string witness) {
      ++cases;
      discrepancies.push_back(std::move(witness));
    }

    void record_success() {
      ++cases;
      ++agreements;
    }

    void merge(Tally const& other) {
      cases += other.cases;
      agreements += other.agreements;
      vacuous += other.vacuous;
      discrepancies.insert(discrepancies.end(),
                           other.discrepancies.begin(),
                           other.discrepancies.end());
    }

    bool ok() const noexcept {
      return discrepancies.empty();
    }
  };

}  // namespace gammaq
