#include "sbp/dp_recurrence.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace sbp {

namespace {
const BigCount kZero = 0;
}

DpLayer::DpLayer(long long people, long long days)
    : people_(people),
      days_(days),
      max_multi_(std::min(people / 2, days)),
      max_single_(std::min(people, days)),
      cells_(static_cast<std::size_t>(max_multi_ + 1) * static_cast<std::size_t>(max_single_ + 1)) {}

const BigCount& DpLayer::at(long long multi_days, long long single_days) const {
    if (multi_days < 0 || single_days < 0 || multi_days > max_multi_ ||
        single_days > max_single_) {
        return kZero;
    }
    return cells_[static_cast<std::size_t>(multi_days) *
                      static_cast<std::size_t>(max_single_ + 1) +
                  static_cast<std::size_t>(single_days)];
}

BigCount& DpLayer::cell(long long multi_days, long long single_days) {
    return cells_[static_cast<std::size_t>(multi_days) *
                      static_cast<std::size_t>(max_single_ + 1) +
                  static_cast<std::size_t>(single_days)];
}

BigCount DpLayer::total() const {
    BigCount sum = 0;
    for (const BigCount& c : cells_) {
        sum += c;
    }
    return sum;
}

BigCount DpLayer::singleton_marginal(long long k) const {
    BigCount sum = 0;
    for (long long j = 0; j <= max_multi_; ++j) {
        sum += at(j, k);
    }
    return sum;
}

void dp_layer_sweep(long long days, long long n_max,
                    const std::function<bool(const DpLayer&)>& visit) {
    if (days < 0) {
        throw std::invalid_argument("dp_layer_sweep: negative day count");
    }
    DpLayer prev(0, days);
    prev.cell(0, 0) = 1;
    if (!visit(prev)) {
        return;
    }
    for (long long people = 1; people <= n_max; ++people) {
        DpLayer cur(people, days);
        for (long long j = 0; j <= cur.max_multi(); ++j) {
            for (long long k = 0; k <= cur.max_single(); ++k) {
                if (2 * j + k > people || j + k > days) {
                    continue;  // structurally zero
                }
                BigCount value = prev.at(j, k) * j;                 // lands on a >=2 day
                value += prev.at(j - 1, k + 1) * (k + 1);           // upgrades a singleton
                value += prev.at(j, k - 1) * (days - j - k + 1);    // opens a singleton
                cur.cell(j, k) = std::move(value);
            }
        }
        if (!visit(cur)) {
            return;
        }
        prev = std::move(cur);
    }
}

BigCount profile_count(long long multi_days, long long single_days, long long people,
                       long long days) {
    if (days < 0) {
        return 0;
    }
    if (multi_days < 0 || single_days < 0 || people < 0 ||
        people < 2 * multi_days + single_days || days < multi_days + single_days) {
        return 0;
    }
    BigCount result = 0;
    dp_layer_sweep(days, people, [&](const DpLayer& layer) {
        if (layer.people() == people) {
            result = layer.at(multi_days, single_days);
        }
        return true;
    });
    return result;
}

ExactRational prob_strong_birthday_dp(long long m, long long n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("prob_strong_birthday_dp: negative parameter");
    }
    if (n == 0) {
        return ExactRational(1);
    }
    if (m == 0) {
        throw std::invalid_argument("prob_strong_birthday_dp: m = 0 with people present");
    }
    BigCount numerator = 0;
    dp_layer_sweep(m, n, [&](const DpLayer& layer) {
        if (layer.people() == n) {
            numerator = layer.strong_numerator();
        }
        return true;
    });
    ExactRational p(numerator, big_pow(m, static_cast<unsigned long long>(n)));
    assert(p >= 0 && p <= 1);
    return p;
}

}  // namespace sbp
