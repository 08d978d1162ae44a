#include "pseudomarket/model.hpp"

#include <algorithm>
#include <set>

namespace pseudomarket {

namespace {

void check_shape(const Matrix& u) {
  if (u.empty() || u.front().empty()) {
    throw Error(ErrorCode::DimensionMismatch, "instance must have at least one agent and item");
  }
  const std::size_t m = u.front().size();
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i].size() != m) {
      throw Error(ErrorCode::DimensionMismatch, "utility matrix is not rectangular",
                  static_cast<long>(i));
    }
  }
}

UtilityClass classify(const Matrix& u) {
  UtilityClass cls;
  const int n = static_cast<int>(u.size());
  cls.alpha.resize(n);
  cls.beta.resize(n);
  bool all_binary = true;
  bool all_two_level = true;
  for (int i = 0; i < n; ++i) {
    std::set<Rational> values(u[i].begin(), u[i].end());
    for (const Rational& v : values) {
      if (!(v == Rational(0) || v == Rational(1))) all_binary = false;
    }
    if (values.size() > 2) {
      all_two_level = false;
      continue;
    }
    cls.alpha[i] = *values.rbegin();
    cls.beta[i] = values.size() == 2 ? *values.begin() : Rational(0);
  }
  if (all_binary) {
    cls.tag = UtilityTag::Binary;
    std::fill(cls.alpha.begin(), cls.alpha.end(), Rational(1));
    std::fill(cls.beta.begin(), cls.beta.end(), Rational(0));
  } else if (all_two_level) {
    cls.tag = UtilityTag::BiValued;
  } else {
    cls.tag = UtilityTag::General;
    cls.alpha.clear();
    cls.beta.clear();
  }
  return cls;
}

LikedSets compute_liked(const Matrix& u) {
  LikedSets liked;
  liked.items.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rational best = u[i][0];
    for (const Rational& v : u[i]) best = std::max(best, v);
    for (std::size_t j = 0; j < u[i].size(); ++j) {
      if (u[i][j] == best) liked.items[i].push_back(static_cast<int>(j));
    }
  }
  return liked;
}

}  // namespace

Instance::Instance(Matrix u, UtilityClass cls, LikedSets liked)
    : u_(std::move(u)),
      n_(static_cast<int>(u_.size())),
      m_(static_cast<int>(u_.front().size())),
      class_(std::move(cls)),
      liked_(std::move(liked)) {}

Instance Instance::unchecked(Matrix utilities) {
  check_shape(utilities);
  UtilityClass cls = classify(utilities);
  LikedSets liked = compute_liked(utilities);
  return Instance(std::move(utilities), std::move(cls), std::move(liked));
}

Instance Instance::validate(Matrix utilities) {
  check_shape(utilities);
  const int n = static_cast<int>(utilities.size());
  const int m = static_cast<int>(utilities.front().size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (utilities[i][j].sign() < 0) {
        throw Error(ErrorCode::NegativeUtility, "negative utility entry", i, j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    bool positive = false;
    for (int j = 0; j < m; ++j) positive |= utilities[i][j].sign() > 0;
    if (!positive) throw Error(ErrorCode::ZeroRow, "agent values no item positively", i);
  }
  for (int j = 0; j < m; ++j) {
    bool positive = false;
    for (int i = 0; i < n; ++i) positive |= utilities[i][j].sign() > 0;
    if (!positive) throw Error(ErrorCode::ZeroColumn, "item valued by no agent", -1, j);
  }
  return unchecked(std::move(utilities));
}

Instance Instance::from_liked_sets(int items, const std::vector<std::vector<int>>& liked) {
  Matrix u(liked.size(), std::vector<Rational>(items, Rational(0)));
  for (std::size_t i = 0; i < liked.size(); ++i) {
    if (liked[i].empty()) {
      throw Error(ErrorCode::ZeroRow, "empty liked set", static_cast<long>(i));
    }
    for (int j : liked[i]) {
      if (j < 0 || j >= items) {
        throw Error(ErrorCode::DimensionMismatch, "liked item out of range", static_cast<long>(i),
                    j);
      }
      u[i][j] = Rational(1);
    }
  }
  return unchecked(std::move(u));
}

FractionalAssignment FractionalAssignment::from_matrix(Matrix m) {
  check_shape(m);
  const int agents = static_cast<int>(m.size());
  const int items = static_cast<int>(m.front().size());
  for (int j = 0; j < items; ++j) {
    Rational column;
    for (int i = 0; i < agents; ++i) {
      const Rational& v = m[i][j];
      if (v.sign() < 0 || v > Rational(1)) {
        throw Error(ErrorCode::MassMismatch, "assignment entry outside [0,1]", i, j);
      }
      column += v;
    }
    if (column != Rational(1)) {
      throw Error(ErrorCode::MassMismatch, "column does not sum to 1", -1, j);
    }
  }
  FractionalAssignment out;
  out.x = std::move(m);
  out.balanced = true;
  for (int i = 0; i < agents; ++i) {
    Rational row;
    for (int j = 0; j < items; ++j) row += out.x[i][j];
    if (row != Rational(1)) {
      out.balanced = false;
      break;
    }
  }
  return out;
}

std::vector<Rational> FractionalAssignment::row_sums() const {
  std::vector<Rational> sums(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sums[i] = sum(x[i]);
  return sums;
}

Instance binary_reduce(const Instance& inst) {
  if (!inst.dichotomous()) {
    throw Error(ErrorCode::NotDichotomous, "binary reduction needs binary or bi-valued utilities");
  }
  if (inst.binary()) return inst;
  Matrix u(inst.agents(), std::vector<Rational>(inst.items(), Rational(0)));
  const UtilityClass& cls = inst.utility_class();
  for (int i = 0; i < inst.agents(); ++i) {
    for (int j = 0; j < inst.items(); ++j) {
      if (inst.utility(i, j) == cls.alpha[i]) u[i][j] = Rational(1);
    }
  }
  return Instance::unchecked(std::move(u));
}

std::vector<Rational> utility_vector(const Instance& inst, const FractionalAssignment& x) {
  if (x.agents() != inst.agents() || x.items() != inst.items()) {
    throw Error(ErrorCode::DimensionMismatch, "assignment shape does not match instance");
  }
  std::vector<Rational> out(inst.agents());
  for (int i = 0; i < inst.agents(); ++i) {
    Rational total;
    for (int j = 0; j < inst.items(); ++j) total += x.x[i][j] * inst.utility(i, j);
    out[i] = total;
  }
  return out;
}

Instance scale_shift(const Instance& inst, const std::vector<Rational>& a,
                     const std::vector<Rational>& b) {
  if (static_cast<int>(a.size()) != inst.agents() || static_cast<int>(b.size()) != inst.agents()) {
    throw Error(ErrorCode::DimensionMismatch, "scale/shift vectors must have one entry per agent");
  }
  Matrix u = inst.utilities();
  for (int i = 0; i < inst.agents(); ++i) {
    if (a[i].sign() <= 0) {
      throw Error(ErrorCode::NegativeResult, "scale factor must be positive", i);
    }
    for (int j = 0; j < inst.items(); ++j) {
      u[i][j] = a[i] * u[i][j] + b[i];
      if (u[i][j].sign() < 0) {
        throw Error(ErrorCode::NegativeResult, "shifted utility is negative", i, j);
      }
    }
  }
  return Instance::unchecked(std::move(u));
}

}  // namespace pseudomarket
