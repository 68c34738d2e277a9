/*
   Copyright 2026 qpend developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QPEND_TEST_ORACLE_HPP
#define QPEND_TEST_ORACLE_HPP

#include <vector>

#include "qpend/real.hpp"

namespace qpend::test {

/// Independent eigenvalue oracle for small symmetric tridiagonal matrices
/// with constant off-diagonal: evaluates the characteristic polynomial of the
/// k-th leading principal minor through the three-term recurrence
///   p_0 = 1, p_1 = a_1 - x, p_k = (a_k - x) p_{k-1} - b^2 p_{k-2}
/// and brackets the roots level by level using strict interlacing (roots of
/// p_k separate those of p_{k+1} when b != 0). No Sturm sign counting is
/// involved, so this path is independent of the solver it checks.
class CharPolyOracle {
public:
    CharPolyOracle(std::vector<Real> diag, Real offdiag)
        : diag_(std::move(diag)), b2_(offdiag * offdiag) {}

    Real charpoly(const Real& x) const { return minor_poly(diag_.size(), x); }

    std::vector<Real> eigenvalues(const Real& tol) const {
        Real lo = diag_[0], hi = diag_[0];
        for (const Real& d : diag_) {
            if (d < lo) lo = d;
            if (d > hi) hi = d;
        }
        Real radius = 2 * sqrt(b2_) + tol;
        lo -= radius;
        hi += radius;

        std::vector<Real> roots{diag_[0]};  // level 1
        for (size_t k = 2; k <= diag_.size(); ++k) {
            std::vector<Real> next;
            Real left = lo;
            for (size_t i = 0; i <= roots.size(); ++i) {
                Real right = i < roots.size() ? roots[i] : hi;
                next.push_back(bisect_root(k, left, right, tol));
                left = right;
            }
            roots = std::move(next);
        }
        return roots;
    }

private:
    Real minor_poly(size_t k, const Real& x) const {
        Real pm1 = 1, p = diag_[0] - x, t;
        for (size_t i = 1; i < k; ++i) {
            t = (diag_[i] - x) * p - b2_ * pm1;
            pm1 = p;
            p = t;
        }
        return k == 0 ? pm1 : p;
    }

    Real bisect_root(size_t k, Real lo, Real hi, const Real& tol) const {
        Real flo = minor_poly(k, lo);
        while (hi - lo > tol) {
            Real mid = (lo + hi) / 2;
            if (mid <= lo || mid >= hi)
                break;
            Real fm = minor_poly(k, mid);
            if (fm == 0) {
                // exact hit: the root is mid
                return mid;
            }
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return (lo + hi) / 2;
    }

    std::vector<Real> diag_;
    Real b2_;
};

}  // namespace qpend::test

#endif
