#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace chalg {

/*
 * A monotone map nu: [0..r] -> [0..n] is stored as its value list
 * (size r+1, weakly increasing).  Simplices act on the right:
 * x(nu) has dimension r when x has dimension n.
 */
using Monotone = std::vector<int>;

inline bool weakly_increasing(const Monotone& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1]) return false;
    return true;
}

inline bool strictly_increasing(const Monotone& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return false;
    return true;
}

/* surjective onto [0..top] and every fiber an interval of size <= 2 is not
   required; slowly increasing = weakly increasing with steps in {0,1} */
inline bool slowly_increasing(const Monotone& v) {
    for (size_t i = 1; i < v.size(); ++i) {
        int d = v[i] - v[i - 1];
        if (d != 0 && d != 1) return false;
    }
    return true;
}

inline bool surjective_onto(const Monotone& v, int top) {
    std::vector<char> hit(top + 1, 0);
    for (int x : v) {
        if (x < 0 || x > top) return false;
        hit[x] = 1;
    }
    for (char c : hit)
        if (!c) return false;
    return true;
}

/* identity [0..n] -> [0..n] */
inline Monotone mono_id(int n) {
    Monotone v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return v;
}

/* coface delta_i: [0..n-1] -> [0..n], skipping i */
inline Monotone mono_delta(int n, int i) {
    Monotone v;
    v.reserve(n);
    for (int j = 0; j <= n; ++j)
        if (j != i) v.push_back(j);
    return v;
}

/* codegeneracy sigma_i: [0..n+1] -> [0..n], repeating i */
inline Monotone mono_sigma(int n, int i) {
    Monotone v;
    v.reserve(n + 2);
    for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
    return v;
}

/* nu o nu2 pointwise */
inline Monotone mono_compose(const Monotone& nu, const Monotone& nu2) {
    Monotone v(nu2.size());
    for (size_t i = 0; i < nu2.size(); ++i) {
        int x = nu2[i];
        if (x < 0 || x >= (int)nu.size()) throw std::out_of_range("mono_compose");
        v[i] = nu[x];
    }
    return v;
}

/* collapse set of a monotone surjection: positions i with nu(i) = nu(i+1);
   equals the degeneracy word of the corresponding operator, as a set */
inline std::vector<int> mono_collapses(const Monotone& v) {
    std::vector<int> w;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1]) w.push_back((int)i);
    return w;
}

/* the monotone surjection [0..q] ->> [0..q-|word|] collapsing at the given
   strictly decreasing degeneracy word */
inline Monotone mono_from_word(int q, const std::vector<int>& word) {
    Monotone v(q + 1);
    int drop = 0;
    size_t t = word.size();
    for (int i = 0; i <= q; ++i) {
        // word is strictly decreasing; count entries < i
        int cnt = 0;
        for (int w : word)
            if (w < i) ++cnt;
        v[i] = i - cnt;
    }
    (void)drop;
    (void)t;
    return v;
}

/* factor nu = delta o sigma with sigma surjective, delta injective;
   returns {injective image values (= delta), collapse word of sigma (strictly
   decreasing)} */
struct MonoFactorization {
    Monotone injective;        // strictly increasing values of nu
    std::vector<int> word;     // strictly decreasing degeneracy word
};

inline MonoFactorization mono_factor(const Monotone& nu) {
    MonoFactorization f;
    for (size_t i = 0; i < nu.size(); ++i) {
        if (i == 0 || nu[i] != nu[i - 1])
            f.injective.push_back(nu[i]);
        else
            f.word.push_back((int)i - 1);
    }
    std::sort(f.word.rbegin(), f.word.rend());
    return f;
}

}  // namespace chalg
