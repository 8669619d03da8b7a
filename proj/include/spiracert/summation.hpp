#pragma once

namespace spiracert {

/// Compensated (error-free transformation) accumulator. Tracks the rounding
/// error of every addition and folds it back into the result, so long sums of
/// small terms keep close to full binary64 accuracy. Summation order is fixed
/// by the caller; results are bit-reproducible for a fixed input sequence.
template <typename Real = double>
class StableAccumulator {
  public:
    StableAccumulator() = default;
    explicit StableAccumulator(Real init) : sum_(init) {}

    void add(Real x) {
        const Real t = sum_ + x;
        const Real z = t - sum_;
        comp_ += (sum_ - (t - z)) + (x - z);
        sum_ = t;
    }

    StableAccumulator& operator+=(Real x) {
        add(x);
        return *this;
    }

    Real get() const { return sum_ + comp_; }

  private:
    Real sum_ = 0;
    Real comp_ = 0;
};

}  // namespace spiracert
