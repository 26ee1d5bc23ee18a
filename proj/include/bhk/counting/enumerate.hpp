#pragma once

#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <thread>

#include "bhk/counting/pencil.hpp"

namespace bhk::count {

struct CountConfig {
    unsigned jobs = 0;                          // 0: hardware concurrency
    std::uint64_t work_cap = 10'000'000'000ull;  // evaluated points
    std::uint64_t chunk = 0;                    // prefixes per chunk, 0: automatic

    unsigned threads() const {
        if (jobs) return jobs;
        unsigned h = std::thread::hardware_concurrency();
        return h ? h : 1;
    }
};

namespace detail {

inline std::uint64_t ipow_capped(std::uint64_t q, std::size_t k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > cap / q) return cap + 1;
        r *= q;
    }
    return r;
}

/// Runs body(begin, end) over contiguous chunks of [0, total) and sums the results.
inline std::uint64_t parallel_sum(std::uint64_t total, const CountConfig& cfg,
                                  const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& body) {
    const unsigned nt = static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads(), std::max<std::uint64_t>(total, 1)));
    std::uint64_t chunk = cfg.chunk ? cfg.chunk : std::max<std::uint64_t>(1, (total + 4 * nt - 1) / (4 * nt));
    const std::uint64_t nchunks = (total + chunk - 1) / chunk;
    std::vector<std::uint64_t> partial(nchunks, 0);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < nchunks;) {
            partial[c] = body(c * chunk, std::min(total, (c + 1) * chunk));
        }
    };
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::uint64_t sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

/// Walks prefixes (x_0..x_{k-1}) of a polynomial in lexicographic order and
/// exposes, for each, the coefficients of the powers of the last variable.
class PrefixWalker {
   public:
    PrefixWalker(const SparsePoly& g, const FieldTable& f) : g_(g), f_(f), k_(g.nvars - 1) {
        for (const auto& t : g.terms) {
            unsigned e = t.exps[k_];
            if (std::find(last_exps_.begin(), last_exps_.end(), e) == last_exps_.end()) last_exps_.push_back(e);
        }
        std::sort(last_exps_.begin(), last_exps_.end());
        for (const auto& t : g.terms)
            slot_of_term_.push_back(static_cast<unsigned>(std::find(last_exps_.begin(), last_exps_.end(), t.exps[k_]) - last_exps_.begin()));
        // power tables for every exponent used by a prefix variable
        for (const auto& t : g.terms)
            for (std::size_t i = 0; i < k_; ++i) pow_index(t.exps[i]);
    }

    std::size_t prefix_vars() const { return k_; }
    const std::vector<unsigned>& last_exponents() const { return last_exps_; }

    /// pows[e][x] = x^e
    const std::vector<Element>& power_table(unsigned e) { return pows_[pow_index(e)]; }

    /// Calls visit(digits, slots) for prefix indices [begin, end).
    template <class Visit>
    void walk(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
        const std::uint64_t q = f_.q();
        const std::size_t nt = g_.terms.size();
        std::vector<Element> digits(k_, 0);
        std::uint64_t v = begin;
        for (std::size_t i = k_; i-- > 0;) {
            digits[i] = static_cast<Element>(v % q);
            v /= q;
        }
        // partial[l * nt + t] = coeff_t * prod_{i < l} x_i^{e_ti}
        std::vector<Element> partial((k_ + 1) * nt);
        for (std::size_t t = 0; t < nt; ++t) partial[t] = g_.terms[t].coeff;
        auto rebuild = [&](std::size_t from) {
            for (std::size_t l = from; l < k_; ++l)
                for (std::size_t t = 0; t < nt; ++t) {
                    unsigned e = g_.terms[t].exps[l];
                    Element base = partial[l * nt + t];
                    partial[(l + 1) * nt + t] = e == 0 || base == 0 ? base : f_.mul(base, pows_[pow_slot_.at(e)][digits[l]]);
                }
        };
        rebuild(0);
        std::vector<Element> slots(last_exps_.size());
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::fill(slots.begin(), slots.end(), 0);
            for (std::size_t t = 0; t < nt; ++t) {
                Element m = partial[k_ * nt + t];
                if (m) slots[slot_of_term_[t]] = f_.add(slots[slot_of_term_[t]], m);
            }
            visit(digits, slots);
            if (idx + 1 == end) break;
            // odometer increment
            std::size_t pos = k_;
            while (pos-- > 0) {
                if (++digits[pos] < q) break;
                digits[pos] = 0;
            }
            rebuild(pos);
        }
    }

   private:
    std::size_t pow_index(unsigned e) {
        auto it = pow_slot_.find(e);
        if (it != pow_slot_.end()) return it->second;
        std::vector<Element> tab(f_.q());
        for (std::uint64_t x = 0; x < f_.q(); ++x) tab[x] = f_.pow(static_cast<Element>(x), e);
        pows_.push_back(std::move(tab));
        pow_slot_[e] = pows_.size() - 1;
        return pows_.size() - 1;
    }

    const SparsePoly& g_;
    const FieldTable& f_;
    std::size_t k_;
    std::vector<unsigned> last_exps_;
    std::vector<unsigned> slot_of_term_;
    std::map<unsigned, std::size_t> pow_slot_;
    std::deque<std::vector<Element>> pows_;  // stable references
};

/// Root counts of monic x^E + a x^{E1} + b x^{E0} (or fewer lower terms), indexed by (a, b).
struct RootTable {
    unsigned lead = 0;
    std::vector<unsigned> lower;  // decreasing
    std::vector<std::uint16_t> counts;
};

inline RootTable build_root_table(unsigned lead, std::vector<unsigned> lower, const FieldTable& f) {
    const std::uint64_t q = f.q();
    RootTable t{lead, lower, {}};
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < lower.size(); ++i) size *= q;
    t.counts.assign(size, 0);
    if (lower.empty()) {
        t.counts[0] = 1;  // x^E = 0
        return t;
    }
    const unsigned e0 = lower.back();
    std::uint64_t outer = lower.size() == 2 ? q : 1;
    for (std::uint64_t xv = 0; xv < q; ++xv) {
        Element x = static_cast<Element>(xv);
        if (x == 0 && e0 > 0) continue;
        Element xe = f.pow(x, lead);
        Element inv0 = e0 ? f.inv(f.pow(x, e0)) : 1;
        Element x1 = lower.size() == 2 ? f.pow(x, lower[0]) : 0;
        for (std::uint64_t a = 0; a < outer; ++a) {
            Element val = lower.size() == 2 ? f.add(xe, f.mul(static_cast<Element>(a), x1)) : xe;
            Element b = f.mul(f.neg(val), inv0);
            ++t.counts[a * (outer == 1 ? 0 : q) + b];
        }
    }
    if (e0 > 0)
        for (auto& c : t.counts) ++c;
    return t;
}

/// Number of x in F_q with sum_s slots[s] x^{exps[s]} = 0.
inline std::uint64_t scan_roots(const std::vector<Element>& slots, const std::vector<const std::vector<Element>*>& pows,
                                const FieldTable& f) {
    std::uint64_t hits = 0;
    for (std::uint64_t x = 0; x < f.q(); ++x) {
        Element v = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (slots[s]) v = f.add(v, f.mul(slots[s], (*pows[s])[x]));
        hits += v == 0;
    }
    return hits;
}

}  // namespace detail

/// Zeros of g in F_q^{nvars}, trying every value of the last variable.
inline std::uint64_t affine_zeros_brute(const SparsePoly& g, const FieldTable& f, const CountConfig& cfg) {
    const std::uint64_t q = f.q();
    if (g.nvars == 0) return g.terms.empty() || evaluate(g, {}, f) == 0 ? 1 : 0;
    if (detail::ipow_capped(q, g.nvars, cfg.work_cap) > cfg.work_cap)
        throw CapExceeded("brute force needs q^" + std::to_string(g.nvars) + " evaluations, above the work cap");
    detail::PrefixWalker w(g, f);
    std::vector<const std::vector<Element>*> pows;
    for (auto e : w.last_exponents()) pows.push_back(&w.power_table(e));
    std::uint64_t prefixes = detail::ipow_capped(q, w.prefix_vars(), cfg.work_cap);
    return detail::parallel_sum(prefixes, cfg, [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t c = 0;
        w.walk(b, e, [&](const std::vector<Element>&, const std::vector<Element>& slots) { c += detail::scan_roots(slots, pows, f); });
        return c;
    });
}

/// Same count with the last variable handled by root-count tables.
inline std::uint64_t affine_zeros_lastvar(const SparsePoly& g, const FieldTable& f, const CountConfig& cfg) {
    const std::uint64_t q = f.q();
    if (g.nvars == 0) return affine_zeros_brute(g, f, cfg);
    detail::PrefixWalker w(g, f);
    const auto& exps = w.last_exponents();
    std::uint64_t prefixes = detail::ipow_capped(q, w.prefix_vars(), cfg.work_cap);
    if (prefixes > cfg.work_cap / std::max<std::size_t>(1, g.terms.size()))
        throw CapExceeded("last-variable method needs q^" + std::to_string(w.prefix_vars()) + " prefixes, above the work cap");
    std::vector<const std::vector<Element>*> pows;
    for (auto e : exps) pows.push_back(&w.power_table(e));

    // One table per possible leading slot, when small enough to pay off.
    const std::uint64_t table_cap = std::min<std::uint64_t>(std::uint64_t{1} << 24, std::max<std::uint64_t>(prefixes, q));
    std::vector<std::optional<detail::RootTable>> tables(exps.size());
    for (std::size_t s = 0; s < exps.size(); ++s) {
        if (exps[s] == 0) continue;
        std::vector<unsigned> lower(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(s));
        std::reverse(lower.begin(), lower.end());
        if (lower.size() > 2) continue;
        if (detail::ipow_capped(q, lower.size(), table_cap) > table_cap) continue;
        tables[s] = detail::build_root_table(exps[s], lower, f);
    }
    return detail::parallel_sum(prefixes, cfg, [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t c = 0;
        std::vector<Element> norm(exps.size());
        w.walk(b, e, [&](const std::vector<Element>&, const std::vector<Element>& slots) {
            std::size_t lead = slots.size();
            while (lead > 0 && slots[lead - 1] == 0) --lead;
            if (lead == 0) {
                c += q;
                return;
            }
            --lead;
            if (exps[lead] == 0) return;  // nonzero constant
            if (tables[lead]) {
                Element inv = f.inv(slots[lead]);
                const auto& t = *tables[lead];
                std::uint64_t idx = 0;
                for (std::size_t j = lead; j-- > 0;) idx = idx * q + f.mul(slots[j], inv);
                // lower is stored decreasing: index = a * q + b with a the higher slot
                c += t.counts[idx];
                return;
            }
            std::vector<Element> sl(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(lead) + 1);
            std::vector<const std::vector<Element>*> pw(pows.begin(), pows.begin() + static_cast<std::ptrdiff_t>(lead) + 1);
            c += detail::scan_roots(sl, pw, f);
        });
        return c;
    });
}

/// Calls visit(point) for every zero of g in F_q^{nvars}; stops early when visit returns false.
/// Returns false if stopped.
inline bool for_each_zero(const SparsePoly& g, const FieldTable& f, const CountConfig& cfg,
                          const std::function<bool(const std::vector<Element>&)>& visit) {
    const std::uint64_t q = f.q();
    if (g.nvars == 0) return g.terms.empty() || evaluate(g, {}, f) == 0 ? visit({}) : true;
    if (detail::ipow_capped(q, g.nvars, cfg.work_cap) > cfg.work_cap) throw CapExceeded("zero enumeration above the work cap");
    detail::PrefixWalker w(g, f);
    std::vector<const std::vector<Element>*> pows;
    for (auto e : w.last_exponents()) pows.push_back(&w.power_table(e));
    std::uint64_t prefixes = detail::ipow_capped(q, w.prefix_vars(), cfg.work_cap);
    std::atomic<bool> stop{false};
    detail::parallel_sum(prefixes, cfg, [&](std::uint64_t b, std::uint64_t e) -> std::uint64_t {
        if (stop) return 0;
        std::vector<Element> point(g.nvars);
        w.walk(b, e, [&](const std::vector<Element>& digits, const std::vector<Element>& slots) {
            if (stop) return;
            for (std::uint64_t x = 0; x < q; ++x) {
                Element v = 0;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (slots[s]) v = f.add(v, f.mul(slots[s], (*pows[s])[x]));
                if (v != 0) continue;
                std::copy(digits.begin(), digits.end(), point.begin());
                point.back() = static_cast<Element>(x);
                if (!visit(point)) {
                    stop = true;
                    return;
                }
            }
        });
        return 0;
    });
    return !stop;
}

}  // namespace bhk::count
