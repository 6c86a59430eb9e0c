#ifndef HREG_SCHEDULE_HPP
#define HREG_SCHEDULE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hreg/regularity.hpp"

namespace hreg {

// The sample-size recursion is tower-type; evaluation refuses (with a trace
// of what it was computing) once any intermediate exceeds max_bits bits or
// the call count exceeds max_steps.
struct ScheduleCeiling {
  std::int64_t max_bits = std::int64_t(1) << 20;
  int max_steps = 20000;
};

// Sample sizes m^(i) and thresholds ntilde^(j) for one parameter level
// (k, h, b, eps), with child levels (k-1, 2h, B(b, m), eps1) for positive
// last arguments and (k-1, h, b, eps) at zero.  Values are memoized; all
// arithmetic is exact.
class SampleSchedule {
 public:
  SampleSchedule(int r, int k, int h, std::vector<BigInt> b, const Rational& eps,
                 ScheduleCeiling ceiling = {});

  const Constants& constants() const { return cst_; }

  // m^(i)(n_i, ..., n_{k-1}); args has k-i entries.
  BigInt m(int i, const std::vector<BigInt>& args);

  // ntilde^(j)(n_{j+1}, ..., n_{k-1}); args has k-1-j entries (empty at the
  // top, j = k-1, where the threshold is a closed form in the constants).
  BigInt ntilde(int j, const std::vector<BigInt>& args);

  // Evaluation log of the most recent call, newest last (kept short).
  const std::vector<std::string>& trace() const { return core_->trace; }

 private:
  struct Core {
    ScheduleCeiling ceiling;
    int steps = 0;
    std::vector<std::string> trace;
  };

  SampleSchedule(int r, int k, int h, std::vector<BigInt> b, const Rational& eps,
                 std::shared_ptr<Core> core);

  SampleSchedule& base_child();                    // (k-1, h, b, eps)
  SampleSchedule& star_child(const BigInt& last);  // (k-1, 2h, B(b, m(last)), eps1)
  void note(const std::string& line);
  void step();

  int r_ = 0, k_ = 0, h_ = 0;
  std::vector<BigInt> b_;
  Rational eps_;
  Constants cst_;
  std::shared_ptr<Core> core_;

  std::map<std::pair<int, std::vector<BigInt>>, BigInt> memo_m_, memo_n_;
  std::unique_ptr<SampleSchedule> base_;
  std::map<BigInt, std::unique_ptr<SampleSchedule>> stars_;
};

}  // namespace hreg

#endif
