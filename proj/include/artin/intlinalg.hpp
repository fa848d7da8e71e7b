#pragma once

// Exact integer matrices and Smith normal form with unimodular transforms.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/error.hpp"

namespace artin {

  using BigInt = boost::multiprecision::cpp_int;

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::vector<std::vector<BigInt>> const& rows) {
      rows_ = rows.size();
      cols_ = rows.empty() ? 0 : rows.front().size();
      data_.reserve(rows_ * cols_);
      for (auto const& r : rows) {
        if (r.size() != cols_) {
          throw input_error("matrix rows must have equal length");
        }
        data_.insert(data_.end(), r.begin(), r.end());
      }
    }

    static IntMatrix identity(std::size_t n) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }

    BigInt& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
      }
    }
    void swap_cols(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, BigInt const& k) {
      for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(dst, j) += k * (*this)(src, j);
      }
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, BigInt const& k) {
      for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, dst) += k * (*this)(i, src);
      }
    }
    void negate_row(std::size_t r) {
      for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(r, j) = -(*this)(r, j);
      }
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
      if (a.cols_ != b.rows_) {
        throw input_error("matrix dimension mismatch in product");
      }
      IntMatrix out(a.rows_, b.cols_);
      for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
          if (a(i, k) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b.cols_; ++j) {
            out(i, j) += a(i, k) * b(k, j);
          }
        }
      }
      return out;
    }

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t         rows_ = 0;
    std::size_t         cols_ = 0;
    std::vector<BigInt> data_;
  };

  // U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
  struct SmithDecomposition {
    IntMatrix           U;
    IntMatrix           D;
    IntMatrix           V;
    std::vector<BigInt> invariant_factors;  // min(rows, cols) entries, >= 0
  };

  inline SmithDecomposition smith_normal_form(IntMatrix const& A) {
    std::size_t const m = A.rows(), n = A.cols();
    IntMatrix         D = A;
    IntMatrix         U = IntMatrix::identity(m);
    IntMatrix         V = IntMatrix::identity(n);

    std::size_t const steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
      while (true) {
        // pivot of least absolute value in the trailing block
        bool        found = false;
        std::size_t pi = t, pj = t;
        BigInt      best;
        for (std::size_t i = t; i < m; ++i) {
          for (std::size_t j = t; j < n; ++j) {
            if (D(i, j) == 0) {
              continue;
            }
            BigInt a = abs(D(i, j));
            if (!found || a < best) {
              found = true;
              best  = a;
              pi    = i;
              pj    = j;
            }
          }
        }
        if (!found) {
          break;
        }
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (D(i, t) == 0) {
            continue;
          }
          BigInt q = D(i, t) / D(t, t);
          D.add_row(i, t, -q);
          U.add_row(i, t, -q);
          if (D(i, t) != 0) {
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (D(t, j) == 0) {
            continue;
          }
          BigInt q = D(t, j) / D(t, t);
          D.add_col(j, t, -q);
          V.add_col(j, t, -q);
          if (D(t, j) != 0) {
            clean = false;
          }
        }
        if (!clean) {
          continue;
        }
        // divisibility of the remaining block by the pivot
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (D(i, j) % D(t, t) != 0) {
              D.add_row(t, i, 1);
              U.add_row(t, i, 1);
              divisible = false;
              break;
            }
          }
        }
        if (divisible) {
          break;
        }
      }
      if (D(t, t) < 0) {
        D.negate_row(t);
        U.negate_row(t);
      }
    }

    SmithDecomposition out{std::move(U), std::move(D), std::move(V), {}};
    out.invariant_factors.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) {
      out.invariant_factors.push_back(out.D(t, t));
    }
    return out;
  }

  // Z^cols / rowspace(A).
  struct AbelianGroup {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, ascending

    bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }
    std::string describe() const {
      std::string out;
      for (auto const& d : torsion) {
        out += (out.empty() ? "" : " + ") + ("Z/" + d.str());
      }
      if (free_rank > 0) {
        std::string z = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
        out += (out.empty() ? "" : " + ") + z;
      }
      return out.empty() ? "0" : out;
    }
    friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;
  };

  inline AbelianGroup cokernel(IntMatrix const& A) {
    AbelianGroup out;
    std::size_t  nonzero = 0;
    if (A.rows() > 0 && A.cols() > 0) {
      auto snf = smith_normal_form(A);
      for (auto const& d : snf.invariant_factors) {
        if (d != 0) {
          ++nonzero;
          if (d > 1) {
            out.torsion.push_back(d);
          }
        }
      }
    }
    out.free_rank = A.cols() - nonzero;
    return out;
  }

}  // namespace artin
