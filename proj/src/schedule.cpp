#include "hreg/schedule.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "hreg/errors.hpp"
#include "hreg/regularize.hpp"

namespace hreg {
namespace {

std::string args_str(const std::vector<BigInt>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i].str();
  }
  return s + ")";
}

std::int64_t bit_size(const BigInt& x) { return x == 0 ? 1 : static_cast<std::int64_t>(msb(x)) + 1; }

}  // namespace

SampleSchedule::SampleSchedule(int r, int k, int h, std::vector<BigInt> b, const Rational& eps,
                               ScheduleCeiling ceiling)
    : SampleSchedule(r, k, h, std::move(b), eps, std::make_shared<Core>(Core{ceiling, 0, {}})) {}

SampleSchedule::SampleSchedule(int r, int k, int h, std::vector<BigInt> b, const Rational& eps,
                               std::shared_ptr<Core> core)
    : r_(r), k_(k), h_(h), b_(std::move(b)), eps_(eps), core_(std::move(core)) {
  if (k_ < 1 || r_ < k_) throw ValidationError("schedule needs 1 <= k <= r");
  if (static_cast<int>(b_.size()) != k_) throw ValidationError("schedule needs one b entry per size");
  for (const BigInt& x : b_)
    if (x < 1) throw ValidationError("schedule color counts must be positive");
  cst_ = regularity_constants(k_, h_, r_, b_.back(), eps_);
}

void SampleSchedule::note(const std::string& line) {
  core_->trace.push_back(line);
  if (core_->trace.size() > 200) core_->trace.erase(core_->trace.begin());
}

void SampleSchedule::step() {
  if (++core_->steps > core_->ceiling.max_steps)
    throw BudgetExceeded("schedule evaluation exceeded " +
                             std::to_string(core_->ceiling.max_steps) + " steps",
                         core_->trace);
}

SampleSchedule& SampleSchedule::base_child() {
  if (!base_) {
    std::vector<BigInt> b(b_.begin(), b_.end() - 1);
    base_.reset(new SampleSchedule(r_, k_ - 1, h_, std::move(b), eps_, core_));
  }
  return *base_;
}

SampleSchedule& SampleSchedule::star_child(const BigInt& last) {
  auto it = stars_.find(last);
  if (it != stars_.end()) return *it->second;
  const BigInt mv = m(k_ - 1, {last});
  std::vector<BigInt> bstar;
  for (int t = 1; t <= k_ - 1; ++t)
    bstar.push_back(color_bound(r_, b_, mv, t, core_->ceiling.max_bits));
  auto sched = std::unique_ptr<SampleSchedule>(
      new SampleSchedule(r_, k_ - 1, 2 * h_, std::move(bstar), cst_.eps1, core_));
  return *stars_.emplace(last, std::move(sched)).first->second;
}

BigInt SampleSchedule::m(int i, const std::vector<BigInt>& args) {
  if (k_ < 2) throw ValidationError("sample sizes exist only for k >= 2");
  if (i < 1 || i > k_ - 1) throw ValidationError("sample-size level out of range");
  if (static_cast<int>(args.size()) != k_ - i)
    throw ValidationError("sample-size function takes k-i arguments");
  for (const BigInt& a : args)
    if (a < 0) throw ValidationError("sample-size arguments are nonnegative");

  const auto key = std::make_pair(i, args);
  if (auto it = memo_m_.find(key); it != memo_m_.end()) return it->second;

  // The top level descends through last-1; fill the memo upward so the
  // descent stays flat instead of recursing once per unit of the argument.
  if (i == k_ - 1 && args.back() > 1)
    for (BigInt v = 1; v < args.back(); ++v) m(i, {v});

  try {
    step();
    BigInt result;
    const BigInt last = args.back();
    if (i == k_ - 1) {
      if (last == 0) {
        result = 0;
      } else {
        const BigInt n = last - 1;
        // nbar chain: nbar^(k-2) down to nbar^(1), each feeding the next
        std::vector<BigInt> nbar(k_);  // nbar[j] for j in [1, k-2]
        std::vector<BigInt> tail{n};   // (nbar^(j+1), ..., nbar^(k-2), n)
        for (int j = k_ - 2; j >= 1; --j) {
          nbar[j] = ntilde(j, tail);
          tail.insert(tail.begin(), nbar[j]);
        }
        BigInt msum = 0;
        for (int j = 1; j <= k_ - 1; ++j) {
          std::vector<BigInt> aj;
          for (int t = j; t <= k_ - 2; ++t) aj.push_back(nbar[t]);
          aj.push_back(n);
          msum += m(j, aj);
        }
        // mbar = ceil prod_i (B_i(b, msum)/sqrt(eps1))^(C(r,i) h^i)
        Rational prod = 1;
        BigInt hi = 1;
        for (int t = 1; t <= k_ - 1; ++t) {
          hi *= h_;
          const BigInt bi = color_bound(r_, b_, msum, t, core_->ceiling.max_bits);
          const BigInt e = binomial(r_, t) * hi;
          if (e * bit_size(bi) > core_->ceiling.max_bits ||
              e * bit_size(numerator(cst_.sqrt_eps1) + denominator(cst_.sqrt_eps1)) >
                  core_->ceiling.max_bits)
            throw BudgetExceeded("schedule intermediate exceeds " +
                                     std::to_string(core_->ceiling.max_bits) + " bits",
                                 core_->trace);
          prod *= pow_rational(Rational(bi) / cst_.sqrt_eps1, e.convert_to<unsigned>());
        }
        result = msum + ceil_rational(prod) * h_;
      }
    } else if (last == 0) {
      result = base_child().m(i, {args.begin(), args.end() - 1});
    } else {
      result = star_child(last).m(i, {args.begin(), args.end() - 1});
    }
    if (bit_size(result) > core_->ceiling.max_bits)
      throw BudgetExceeded("sample size exceeds " + std::to_string(core_->ceiling.max_bits) +
                               " bits",
                           core_->trace);
    memo_m_[key] = result;
    note("m^(" + std::to_string(i) + ")[k=" + std::to_string(k_) + ",h=" + std::to_string(h_) +
         "]" + args_str(args) + " = " +
         (bit_size(result) > 256 ? "~2^" + std::to_string(bit_size(result) - 1) : result.str()));
    return result;
  } catch (BudgetExceeded& e) {
    if (e.partial_trace.empty()) e.partial_trace = core_->trace;
    throw;
  }
}

BigInt SampleSchedule::ntilde(int j, const std::vector<BigInt>& args) {
  if (k_ < 2) throw ValidationError("thresholds exist only for k >= 2");
  if (j < 1 || j > k_ - 1) throw ValidationError("threshold level out of range");
  if (static_cast<int>(args.size()) != k_ - 1 - j)
    throw ValidationError("threshold function takes k-1-j arguments");
  for (const BigInt& a : args)
    if (a < 0) throw ValidationError("threshold arguments are nonnegative");

  const auto key = std::make_pair(j, args);
  if (auto it = memo_n_.find(key); it != memo_n_.end()) return it->second;

  try {
    step();
    BigInt result;
    if (j == k_ - 1) {
      // least n with C b_k sqrt(b_k/n) <= eps/(4 C(r,k)); squared:
      // n >= 16 C^2 b_k^3 C(r,k)^2 / eps^2
      const BigInt rk = binomial(r_, k_);
      const Rational need =
          Rational(16) * cst_.c_squared * Rational(b_.back() * b_.back() * b_.back()) *
          Rational(rk * rk) / (eps_ * eps_);
      result = ceil_rational(need);
      if (result < 1) result = 1;
    } else if (args.back() == 0) {
      result = base_child().ntilde(j, {args.begin(), args.end() - 1});
    } else {
      result = star_child(args.back()).ntilde(j, {args.begin(), args.end() - 1});
    }
    if (bit_size(result) > core_->ceiling.max_bits)
      throw BudgetExceeded("threshold exceeds " + std::to_string(core_->ceiling.max_bits) +
                               " bits",
                           core_->trace);
    memo_n_[key] = result;
    note("ntilde^(" + std::to_string(j) + ")[k=" + std::to_string(k_) +
         ",h=" + std::to_string(h_) + "]" + args_str(args) + " = " +
         (bit_size(result) > 256 ? "~2^" + std::to_string(bit_size(result) - 1) : result.str()));
    return result;
  } catch (BudgetExceeded& e) {
    if (e.partial_trace.empty()) e.partial_trace = core_->trace;
    throw;
  }
}

}  // namespace hreg
