/**
 * element.hpp -- sparse vectors over a finite basis, used as algebra
 * elements with fused multi-factor indices (64-bit).
 */
#pragma once

#include <cstdint>
#include <map>

#include "edl/cyclotomic.hpp"

namespace edl {

class SparseVec {
public:
    using Map = std::map<int64_t, Cyc>;

    SparseVec() = default;
    static SparseVec basis(int64_t i, Cyc c = Cyc::rational(1)) {
        SparseVec v;
        v.add(i, c);
        return v;
    }

    void add(int64_t i, const Cyc& c) {
        if (c.is_zero()) return;
        auto it = t_.find(i);
        if (it == t_.end()) {
            t_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    void add(const SparseVec& o, const Cyc& scale = Cyc::rational(1)) {
        if (scale.is_zero()) return;
        for (auto& [i, c] : o.t_) add(i, c * scale);
    }

    bool empty() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    Cyc at(int64_t i) const {
        auto it = t_.find(i);
        return it == t_.end() ? Cyc() : it->second;
    }
    const Map& terms() const { return t_; }

    friend SparseVec operator+(const SparseVec& a, const SparseVec& b) {
        SparseVec r = a;
        r.add(b);
        return r;
    }
    friend SparseVec operator-(const SparseVec& a, const SparseVec& b) {
        SparseVec r = a;
        r.add(b, Cyc::rational(-1));
        return r;
    }
    friend SparseVec operator*(const Cyc& s, const SparseVec& a) {
        SparseVec r;
        r.add(a, s);
        return r;
    }
    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

private:
    Map t_;
};

}  // namespace edl
