#pragma once

#include <vector>

#include "modone/errors.hpp"
#include "modone/numeric.hpp"

namespace modone {

/// Dense exact-rational primal simplex for min c.x s.t. Ax = b, x >= 0,
/// started from a given basic feasible solution (identity basis columns,
/// b >= 0).  Dantzig pricing with a permanent switch to Bland's rule after a
/// pivot budget, so termination is guaranteed without cycling.
class SimplexSolver {
  public:
    SimplexSolver(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::vector<Rat> c,
                  std::vector<std::size_t> basis)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), basis_(std::move(basis)) {
        m_ = a_.size();
        n_ = m_ ? a_[0].size() : 0;
        if (b_.size() != m_ || basis_.size() != m_ || c_.size() != n_)
            throw internal_error("simplex dimensions disagree");
    }

    /// Runs to optimality; returns the objective value.
    Rat solve() {
        reduce_cost_row();
        long pivots = 0;
        const long bland_after = 2 * static_cast<long>(m_ + n_);
        while (true) {
            std::size_t enter = n_;
            if (pivots < bland_after) {
                Rat best(0);
                for (std::size_t j = 0; j < n_; ++j)
                    if (r_[j] < best) {
                        best = r_[j];
                        enter = j;
                    }
            } else {
                for (std::size_t j = 0; j < n_; ++j)
                    if (r_[j] < 0) {
                        enter = j;
                        break;
                    }
            }
            if (enter == n_) break;  // optimal

            std::size_t leave = m_;
            Rat ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rat t = b_[i] / a_[i][enter];
                if (leave == m_ || t < ratio ||
                    (t == ratio && basis_[i] < basis_[leave])) {
                    ratio = t;
                    leave = i;
                }
            }
            if (leave == m_) throw internal_error("unbounded linear program");
            pivot(leave, enter);
            ++pivots;
        }
        Rat obj(0);
        for (std::size_t i = 0; i < m_; ++i) obj += c_[basis_[i]] * b_[i];
        return obj;
    }

    /// Value of variable j in the current basic solution.
    Rat value(std::size_t j) const {
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] == j) return b_[i];
        return Rat(0);
    }

  private:
    void reduce_cost_row() {
        r_ = c_;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat& cb = c_[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) r_[j] -= cb * a_[i][j];
        }
    }

    void pivot(std::size_t leave, std::size_t enter) {
        Rat piv = a_[leave][enter];
        for (std::size_t j = 0; j < n_; ++j) a_[leave][j] /= piv;
        b_[leave] /= piv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == leave) continue;
            Rat f = a_[i][enter];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) a_[i][j] -= f * a_[leave][j];
            b_[i] -= f * b_[leave];
        }
        Rat fr = r_[enter];
        if (fr != 0)
            for (std::size_t j = 0; j < n_; ++j) r_[j] -= fr * a_[leave][j];
        basis_[leave] = enter;
    }

    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_, c_, r_;
    std::vector<std::size_t> basis_;
    std::size_t m_, n_;
};

}  // namespace modone
