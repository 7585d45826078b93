#pragma once

/**
 * @file op_count.hpp
 * @brief Exact tallies of ⊕, ⊙ and * calls made by one algorithm run.
 */

#include <cstdint>
#include <string>

#include "semilin/semiring.hpp"

namespace semilin {

struct OpCountReport {
    std::uint64_t adds = 0;
    std::uint64_t muls = 0;
    std::uint64_t closures = 0;

    OpCountReport& operator+=(const OpCountReport& other) {
        adds += other.adds;
        muls += other.muls;
        closures += other.closures;
        return *this;
    }

    friend OpCountReport operator+(OpCountReport a, const OpCountReport& b) { return a += b; }
    friend bool operator==(const OpCountReport&, const OpCountReport&) = default;
};

inline std::string to_string(const OpCountReport& r) {
    return "adds=" + std::to_string(r.adds) + " muls=" + std::to_string(r.muls) +
           " closures=" + std::to_string(r.closures);
}

/// Forwards to a semiring and counts every call into a run-local report.
template <Semiring S>
class Counting {
public:
    using value_type = value_t<S>;

    Counting(const S& base, OpCountReport& report) : base_(&base), report_(&report) {}

    value_type zero() const { return base_->zero(); }
    value_type one() const { return base_->one(); }

    value_type add(const value_type& x, const value_type& y) const {
        ++report_->adds;
        return base_->add(x, y);
    }
    value_type mul(const value_type& x, const value_type& y) const {
        ++report_->muls;
        return base_->mul(x, y);
    }
    value_type closure(const value_type& x) const {
        ++report_->closures;
        return base_->closure(x);
    }

    const S& base() const { return *base_; }

private:
    const S* base_;
    OpCountReport* report_;
};

}  // namespace semilin
