#include "magical/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace magical {

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_rows(const std::vector<int>& row_lengths) {
  if (row_lengths.empty())
    throw std::invalid_argument("a partition needs at least one row");
  Partition p;
  for (int len : row_lengths) {
    if (len <= 0)
      throw std::invalid_argument("row lengths must be positive, got " +
                                  std::to_string(len));
    p.m_mult[len] += 1;
  }
  return p;
}

Partition Partition::from_multiplicities(const std::map<int, int>& mult) {
  Partition p;
  for (const auto& [len, r] : mult) {
    if (r < 0 || (r > 0 && len <= 0))
      throw std::invalid_argument("invalid multiplicity entry (" +
                                  std::to_string(len) + " -> " +
                                  std::to_string(r) + ")");
    if (r > 0) p.m_mult[len] = r;
  }
  if (p.m_mult.empty())
    throw std::invalid_argument("a partition needs at least one row");
  return p;
}

int Partition::total() const {
  int n = 0;
  for (const auto& [len, r] : m_mult) n += len * r;
  return n;
}

int Partition::multiplicity(int i) const {
  auto it = m_mult.find(i);
  return it == m_mult.end() ? 0 : it->second;
}

int Partition::row_count() const {
  int c = 0;
  for (const auto& [len, r] : m_mult) c += r;
  return c;
}

std::vector<int> Partition::rows() const {
  std::vector<int> out;
  for (auto it = m_mult.rbegin(); it != m_mult.rend(); ++it)
    out.insert(out.end(), it->second, it->first);
  return out;
}

Partition Partition::dual() const {
  // s_j = sum_{i >= j} r_i for 1 <= j <= longest row.
  int longest = m_mult.rbegin()->first;
  std::vector<int> s(longest + 1, 0);
  for (int j = 1; j <= longest; ++j)
    for (const auto& [len, r] : m_mult)
      if (len >= j) s[j] += r;
  std::vector<int> rows;
  for (int j = 1; j <= longest; ++j)
    if (s[j] > 0) rows.push_back(s[j]);
  return from_rows(rows);
}

Partition Partition::doubled() const {
  Partition p;
  for (const auto& [len, r] : m_mult) p.m_mult[len] = 2 * r;
  return p;
}

bool Partition::all_row_lengths_even() const {
  for (const auto& [len, r] : m_mult)
    if (len % 2 != 0) return false;
  return true;
}

int Partition::odd_length_row_count() const {
  int c = 0;
  for (const auto& [len, r] : m_mult)
    if (len % 2 != 0) c += r;
  return c;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int len : rows()) {
    if (!first) os << ',';
    os << len;
    first = false;
  }
  os << ']';
  return os.str();
}

Partition dual_partition(const Partition& p) { return p.dual(); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_rows(acc));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    partitions_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n <= 0) throw std::invalid_argument("partitions need n >= 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

// ---------------------------------------------------------------------------
// SignedYoungDiagram

Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

SignedYoungDiagram SignedYoungDiagram::from_rows(
    const std::vector<std::pair<int, Sign>>& rows) {
  if (rows.empty())
    throw std::invalid_argument("a signed Young diagram needs at least one row");
  SignedYoungDiagram d;
  for (const auto& [len, sign] : rows) {
    if (len <= 0)
      throw std::invalid_argument("row lengths must be positive, got " +
                                  std::to_string(len));
    auto& [p, q] = d.m_rows[len];
    (sign == Sign::plus ? p : q) += 1;
  }
  return d;
}

SignedYoungDiagram SignedYoungDiagram::from_counts(
    const std::map<int, std::pair<int, int>>& counts) {
  SignedYoungDiagram d;
  for (const auto& [len, pq] : counts) {
    if (pq.first < 0 || pq.second < 0 ||
        (pq.first + pq.second > 0 && len <= 0))
      throw std::invalid_argument("invalid signed-row count entry");
    if (pq.first + pq.second > 0) d.m_rows[len] = pq;
  }
  if (d.m_rows.empty())
    throw std::invalid_argument("a signed Young diagram needs at least one row");
  return d;
}

int SignedYoungDiagram::total_boxes() const {
  int n = 0;
  for (const auto& [len, pq] : m_rows) n += len * (pq.first + pq.second);
  return n;
}

std::pair<int, int> SignedYoungDiagram::signature() const {
  // A row of length i leading '+' holds ceil(i/2) plus and floor(i/2) minus
  // boxes; leading '-' swaps the counts.
  int plus = 0, minus = 0;
  for (const auto& [len, pq] : m_rows) {
    int head = (len + 1) / 2, tail = len / 2;
    plus += pq.first * head + pq.second * tail;
    minus += pq.first * tail + pq.second * head;
  }
  return {plus, minus};
}

int SignedYoungDiagram::rows_with(int length, Sign leading) const {
  auto it = m_rows.find(length);
  if (it == m_rows.end()) return 0;
  return leading == Sign::plus ? it->second.first : it->second.second;
}

int SignedYoungDiagram::multiplicity(int length) const {
  auto it = m_rows.find(length);
  return it == m_rows.end() ? 0 : it->second.first + it->second.second;
}

std::vector<std::pair<int, Sign>> SignedYoungDiagram::rows() const {
  std::vector<std::pair<int, Sign>> out;
  for (auto it = m_rows.rbegin(); it != m_rows.rend(); ++it) {
    out.insert(out.end(), it->second.first, {it->first, Sign::plus});
    out.insert(out.end(), it->second.second, {it->first, Sign::minus});
  }
  return out;
}

Partition SignedYoungDiagram::unsigned_partition() const {
  std::map<int, int> mult;
  for (const auto& [len, pq] : m_rows) mult[len] = pq.first + pq.second;
  return Partition::from_multiplicities(mult);
}

Partition SignedYoungDiagram::doubled_partition() const {
  return unsigned_partition().doubled();
}

SignedYoungDiagram SignedYoungDiagram::flipped() const {
  SignedYoungDiagram d;
  for (const auto& [len, pq] : m_rows)
    d.m_rows[len] = {pq.second, pq.first};
  return d;
}

bool SignedYoungDiagram::all_row_lengths_even() const {
  for (const auto& [len, pq] : m_rows)
    if (len % 2 != 0) return false;
  return true;
}

std::string SignedYoungDiagram::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& [len, sign] : rows()) {
    if (!first) os << ',';
    os << len << sign_char(sign);
    first = false;
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// RealFormId

RealFormId RealFormId::sl_real(int n) {
  if (n < 2) throw std::invalid_argument("sl(n,R) requires n >= 2");
  return {RealFamily::sl_R, n, 0, {}};
}

RealFormId RealFormId::su_quaternionic(int m) {
  if (m < 1) throw std::invalid_argument("su*(2m) requires m >= 1");
  return {RealFamily::su_star, m, 0, {}};
}

RealFormId RealFormId::su(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2)
    throw std::invalid_argument("su(p,q) requires p,q >= 0 and p+q >= 2");
  return {RealFamily::su_pq, p, q, {}};
}

RealFormId RealFormId::so(int p, int q) {
  int n = p + q;
  if (p < 0 || q < 0 || (n % 2 == 1 && n < 5) || (n % 2 == 0 && n < 6))
    throw std::invalid_argument(
        "so(p,q) requires p,q >= 0 and p+q >= 5 (odd) or >= 6 (even), got (" +
        std::to_string(p) + "," + std::to_string(q) + ")");
  return {RealFamily::so_pq, p, q, {}};
}

RealFormId RealFormId::so_quaternionic(int m) {
  if (m < 3) throw std::invalid_argument("so*(2m) requires m >= 3");
  return {RealFamily::so_star, m, 0, {}};
}

RealFormId RealFormId::sp_real(int m) {
  if (m < 2) throw std::invalid_argument("sp(2m,R) requires m >= 2");
  return {RealFamily::sp_R, m, 0, {}};
}

RealFormId RealFormId::sp(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2)
    throw std::invalid_argument("sp(2p,2q) requires p,q >= 0 and p+q >= 2");
  return {RealFamily::sp_pq, p, q, {}};
}

namespace {

// Known exceptional labels with (family, rank, delta = dim m - dim h).
struct ExceptionalInfo {
  const char* label;
  Family family;
  int delta;
};

constexpr ExceptionalInfo kExceptionalForms[] = {
    {"g2^2", Family::G2, 2},     {"f4^4", Family::F4, 4},
    {"f4^-20", Family::F4, -20}, {"e6^6", Family::E6, 6},
    {"e6^2", Family::E6, 2},     {"e6^-14", Family::E6, -14},
    {"e6^-26", Family::E6, -26}, {"e7^7", Family::E7, 7},
    {"e7^-5", Family::E7, -5},   {"e7^-25", Family::E7, -25},
    {"e8^8", Family::E8, 8},     {"e8^-24", Family::E8, -24},
};

const ExceptionalInfo* find_exceptional(const std::string& label) {
  for (const auto& info : kExceptionalForms)
    if (label == info.label) return &info;
  return nullptr;
}

}  // namespace

RealFormId RealFormId::exceptional(const std::string& label) {
  if (!find_exceptional(label))
    throw std::invalid_argument("unknown exceptional real form label: " + label);
  return {RealFamily::exceptional, 0, 0, label};
}

AlgebraType RealFormId::complexification() const {
  switch (family) {
    case RealFamily::sl_R: return AlgebraType::make(Family::A, p - 1);
    case RealFamily::su_star: return AlgebraType::make(Family::A, 2 * p - 1);
    case RealFamily::su_pq: return AlgebraType::make(Family::A, p + q - 1);
    case RealFamily::so_pq: {
      int n = p + q;
      return n % 2 == 1 ? AlgebraType::make(Family::B, (n - 1) / 2)
                        : AlgebraType::make(Family::D, n / 2);
    }
    case RealFamily::so_star: return AlgebraType::make(Family::D, p);
    case RealFamily::sp_R: return AlgebraType::make(Family::C, p);
    case RealFamily::sp_pq: return AlgebraType::make(Family::C, p + q);
    case RealFamily::exceptional:
      return AlgebraType::make(find_exceptional(label)->family, 0);
  }
  throw std::logic_error("unknown real family");
}

int RealFormId::delta() const {
  switch (family) {
    case RealFamily::sl_R: return p - 1;
    case RealFamily::su_star: return -2 * p - 1;
    case RealFamily::su_pq: return 1 - (q - p) * (q - p);
    case RealFamily::so_pq: return (p + q - (q - p) * (q - p)) / 2;
    case RealFamily::so_star: return -p;
    case RealFamily::sp_R: return p;
    case RealFamily::sp_pq: return -2 * (p - q) * (p - q) - p - q;
    case RealFamily::exceptional: return find_exceptional(label)->delta;
  }
  throw std::logic_error("unknown real family");
}

int RealFormId::real_dimension() const { return complexification().dimension(); }

int RealFormId::diagram_size() const {
  switch (family) {
    case RealFamily::sl_R: return p;
    case RealFamily::su_star: return p;
    case RealFamily::su_pq: return p + q;
    case RealFamily::so_pq: return p + q;
    case RealFamily::so_star: return p;
    case RealFamily::sp_R: return 2 * p;
    case RealFamily::sp_pq: return p + q;
    case RealFamily::exceptional:
      throw std::invalid_argument(
          "exceptional real forms are not classified by Young diagrams");
  }
  throw std::logic_error("unknown real family");
}

std::string RealFormId::name() const {
  std::ostringstream os;
  switch (family) {
    case RealFamily::sl_R: os << "sl(" << p << ",R)"; break;
    case RealFamily::su_star: os << "su*(" << 2 * p << ")"; break;
    case RealFamily::su_pq: os << "su(" << p << "," << q << ")"; break;
    case RealFamily::so_pq: os << "so(" << p << "," << q << ")"; break;
    case RealFamily::so_star: os << "so*(" << 2 * p << ")"; break;
    case RealFamily::sp_R: os << "sp(" << 2 * p << ",R)"; break;
    case RealFamily::sp_pq: os << "sp(" << 2 * p << "," << 2 * q << ")"; break;
    case RealFamily::exceptional: os << label; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ReductiveType

namespace {

// Dimension of the exceptional algebra with the given rank code
// (2, 4, 6, 7, 8 for g2, f4, e6, e7, e8).
int exceptional_dimension(int code) {
  switch (code) {
    case 2: return 14;
    case 4: return 52;
    case 6: return 78;
    case 7: return 133;
    case 8: return 248;
  }
  throw std::invalid_argument("unknown exceptional rank code");
}

const char* exceptional_letter(int code) {
  switch (code) {
    case 2: return "g2";
    case 4: return "f4";
    case 6: return "e6";
    case 7: return "e7";
    case 8: return "e8";
  }
  throw std::invalid_argument("unknown exceptional rank code");
}

}  // namespace

int ReductiveFactor::dimension() const {
  int n = a + b;
  switch (kind) {
    case FactorKind::gl_R: return a * a;
    case FactorKind::u_star: return a * a;  // u*(2r) has dimension (2r)^2
    case FactorKind::u_pq: return n * n;
    case FactorKind::sp_R: return a * (a + 1) / 2;
    case FactorKind::so_pq: return n * (n - 1) / 2;
    case FactorKind::so_star: return a * (a - 1) / 2;
    case FactorKind::sp_pq: return n * (n + 1) / 2;
    case FactorKind::gl_C: return a * a;
    case FactorKind::sl_C: return a * a - 1;
    case FactorKind::so_C: return a * (a - 1) / 2;
    case FactorKind::sp_C: return a * (a + 1) / 2;
    case FactorKind::sl_R: return a * a - 1;
    case FactorKind::su_star: return a * a - 1;
    case FactorKind::sl_CR: return 2 * (a * a - 1);
    case FactorKind::exc_C: return exceptional_dimension(a);
    case FactorKind::exc_real: return exceptional_dimension(a);
  }
  throw std::logic_error("unknown factor kind");
}

bool ReductiveFactor::semisimple_part_compact() const {
  switch (kind) {
    case FactorKind::gl_R: return a < 2;
    case FactorKind::u_star: return a < 4;    // su*(2) = su(2)
    case FactorKind::u_pq: return a * b == 0;
    case FactorKind::sp_R: return a == 0;
    case FactorKind::so_pq: return a * b == 0;
    case FactorKind::so_star: return a <= 2;  // so*(2) is a u(1)
    case FactorKind::sp_pq: return a * b == 0;
    case FactorKind::sl_R: return a < 2;
    case FactorKind::su_star: return a < 4;   // su*(2) = su(2)
    case FactorKind::sl_CR: return a < 2;
    case FactorKind::exc_real:
      return b == -exceptional_dimension(a);  // compact Cartan index
    default:
      throw std::logic_error("compactness queried on a complex factor");
  }
}

int ReductiveFactor::split_center_count() const {
  switch (kind) {
    case FactorKind::gl_R: return a >= 1 ? 1 : 0;   // R-center of gl(a,R)
    case FactorKind::u_star: return a >= 2 ? 1 : 0; // R-center of u*(2r)
    default: return 0;  // u(p,q) and the semisimple kinds have no R-center
  }
}

std::string ReductiveFactor::name() const {
  std::ostringstream os;
  switch (kind) {
    case FactorKind::gl_R: os << "gl(" << a << ",R)"; break;
    case FactorKind::u_star: os << "u*(" << a << ")"; break;
    case FactorKind::u_pq: os << "u(" << a << "," << b << ")"; break;
    case FactorKind::sp_R: os << "sp(" << a << ",R)"; break;
    case FactorKind::so_pq: os << "so(" << a << "," << b << ")"; break;
    case FactorKind::so_star: os << "so*(" << a << ")"; break;
    case FactorKind::sp_pq: os << "sp(" << a << "," << b << ")"; break;
    case FactorKind::gl_C: os << "gl(" << a << ",C)"; break;
    case FactorKind::sl_C: os << "sl(" << a << ",C)"; break;
    case FactorKind::so_C: os << "so(" << a << ",C)"; break;
    case FactorKind::sp_C: os << "sp(" << a << ",C)"; break;
    case FactorKind::sl_R: os << "sl(" << a << ",R)"; break;
    case FactorKind::su_star: os << "su*(" << a << ")"; break;
    case FactorKind::sl_CR: os << "sl(" << a << ",C)_R"; break;
    case FactorKind::exc_C: os << exceptional_letter(a) << "(C)"; break;
    case FactorKind::exc_real: os << exceptional_letter(a) << "^" << b; break;
  }
  return os.str();
}

ReductiveType ReductiveType::make(std::vector<ReductiveFactor> factors,
                                  bool determinant_one, int torus_rank) {
  ReductiveType t;
  t.determinant_one = determinant_one;
  t.torus_rank = torus_rank;
  for (const ReductiveFactor& f : factors) {
    if (f.kind == FactorKind::so_C && f.a == 2) {
      t.torus_rank += 1;  // so(2,C) is a one-dimensional torus
      continue;
    }
    if (f.dimension() > 0) t.factors.push_back(f);
  }
  std::sort(t.factors.begin(), t.factors.end());
  return t;
}

int ReductiveType::dimension() const {
  int d = torus_rank;
  for (const ReductiveFactor& f : factors) d += f.dimension();
  if (determinant_one) d -= 1;
  return d;
}

bool ReductiveType::compact() const {
  int split_center = 0;
  for (const ReductiveFactor& f : factors) {
    if (!f.semisimple_part_compact()) return false;
    split_center += f.split_center_count();
  }
  if (determinant_one) split_center -= 1;
  return split_center <= 0;
}

std::string ReductiveType::name() const {
  std::ostringstream os;
  bool wrapped = determinant_one && !factors.empty();
  if (wrapped) os << "s(";
  bool first = true;
  for (const ReductiveFactor& f : factors) {
    if (!first) os << " + ";
    os << f.name();
    first = false;
  }
  if (wrapped) os << ")";
  if (torus_rank > 0) {
    if (!first) os << " + ";
    os << "t^" << torus_rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Orbit validity

namespace {

OrbitValidity invalid(std::string reason) {
  return {false, false, std::move(reason)};
}

OrbitValidity check_size(int got, int want, const std::string& what) {
  if (got != want)
    return invalid(what + " requires " + std::to_string(want) + " boxes, got " +
                   std::to_string(got));
  return {true, false, {}};
}

}  // namespace

OrbitValidity validate_complex_orbit(AlgebraType type, const Partition& p) {
  int n = p.total();
  switch (type.family) {
    case Family::A: {
      OrbitValidity v = check_size(n, type.rank + 1, type.name());
      return v;
    }
    case Family::B: {
      OrbitValidity v = check_size(n, 2 * type.rank + 1, type.name());
      if (!v.valid) return v;
      for (const auto& [len, r] : p.multiplicities())
        if (len % 2 == 0 && r % 2 != 0)
          return invalid("even row length " + std::to_string(len) +
                         " has odd multiplicity " + std::to_string(r));
      return v;
    }
    case Family::C: {
      OrbitValidity v = check_size(n, 2 * type.rank, type.name());
      if (!v.valid) return v;
      for (const auto& [len, r] : p.multiplicities())
        if (len % 2 != 0 && r % 2 != 0)
          return invalid("odd row length " + std::to_string(len) +
                         " has odd multiplicity " + std::to_string(r));
      return v;
    }
    case Family::D: {
      OrbitValidity v = check_size(n, 2 * type.rank, type.name());
      if (!v.valid) return v;
      for (const auto& [len, r] : p.multiplicities())
        if (len % 2 == 0 && r % 2 != 0)
          return invalid("even row length " + std::to_string(len) +
                         " has odd multiplicity " + std::to_string(r));
      v.very_even = p.all_row_lengths_even();
      return v;
    }
    default:
      throw std::invalid_argument(
          "partition-indexed orbits exist only for classical types, got " +
          type.name());
  }
}

OrbitValidity validate_real_orbit(const RealFormId& rf,
                                  const SignedYoungDiagram& d) {
  if (!rf.is_classical())
    throw std::invalid_argument(
        "signed-Young-diagram orbits exist only for classical real forms");
  OrbitValidity v = check_size(d.total_boxes(), rf.diagram_size(), rf.name());
  if (!v.valid) return v;
  auto [sig_p, sig_q] = d.signature();
  switch (rf.family) {
    case RealFamily::sl_R:
      v.very_even = d.all_row_lengths_even();
      return v;  // signs carry no information
    case RealFamily::su_star:
      return v;  // signs carry no information
    case RealFamily::su_pq:
      if (sig_p != rf.p || sig_q != rf.q)
        return invalid("signature (" + std::to_string(sig_p) + "," +
                       std::to_string(sig_q) + ") does not match " + rf.name());
      return v;
    case RealFamily::so_pq: {
      if (sig_p != rf.p || sig_q != rf.q)
        return invalid("signature (" + std::to_string(sig_p) + "," +
                       std::to_string(sig_q) + ") does not match " + rf.name());
      for (const auto& [len, pq] : d.row_counts()) {
        if (len % 2 != 0) continue;
        if (pq.second != 0)
          return invalid("even row length " + std::to_string(len) +
                         " must lead with '+'");
        if (pq.first % 2 != 0)
          return invalid("even row length " + std::to_string(len) +
                         " has odd multiplicity " + std::to_string(pq.first));
      }
      v.very_even = d.all_row_lengths_even();
      return v;
    }
    case RealFamily::so_star:
      for (const auto& [len, pq] : d.row_counts())
        if (len % 2 != 0 && pq.second != 0)
          return invalid("odd row length " + std::to_string(len) +
                         " must lead with '+'");
      return v;
    case RealFamily::sp_R:
      for (const auto& [len, pq] : d.row_counts()) {
        if (len % 2 == 0) continue;
        if (pq.second != 0)
          return invalid("odd row length " + std::to_string(len) +
                         " must lead with '+'");
        if (pq.first % 2 != 0)
          return invalid("odd row length " + std::to_string(len) +
                         " has odd multiplicity " + std::to_string(pq.first));
      }
      return v;
    case RealFamily::sp_pq:
      if (sig_p != rf.p || sig_q != rf.q)
        return invalid("signature (" + std::to_string(sig_p) + "," +
                       std::to_string(sig_q) + ") does not match " + rf.name());
      for (const auto& [len, pq] : d.row_counts())
        if (len % 2 == 0 && pq.second != 0)
          return invalid("even row length " + std::to_string(len) +
                         " must lead with '+'");
      return v;
    default:
      throw std::logic_error("unknown real family");
  }
}

std::vector<SignedYoungDiagram> all_valid_diagrams(const RealFormId& rf) {
  int size = rf.diagram_size();
  std::vector<SignedYoungDiagram> out;
  for (const Partition& p : all_partitions(size)) {
    // Enumerate per-length splits r_i = p_i + q_i; lengths in fixed order.
    std::vector<std::pair<int, int>> lengths;  // (length, r_i)
    for (const auto& [len, r] : p.multiplicities()) lengths.emplace_back(len, r);
    std::map<int, std::pair<int, int>> counts;
    auto emit = [&]() {
      SignedYoungDiagram d = SignedYoungDiagram::from_counts(counts);
      if (validate_real_orbit(rf, d).valid) out.push_back(d);
    };
    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx == lengths.size()) {
        emit();
        return;
      }
      auto [len, r] = lengths[idx];
      bool sign_free = rf.family == RealFamily::sl_R ||
                       rf.family == RealFamily::su_star;
      if (sign_free) {
        counts[len] = {r, 0};  // canonical all-'+' representative
        self(self, idx + 1);
        return;
      }
      for (int pi = r; pi >= 0; --pi) {
        counts[len] = {pi, r - pi};
        self(self, idx + 1);
      }
      counts.erase(len);
    };
    rec(rec, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Centralizers

ComplexCentralizer complex_centralizer(AlgebraType type, const Partition& p) {
  OrbitValidity v = validate_complex_orbit(type, p);
  if (!v.valid)
    throw std::invalid_argument("invalid orbit for " + type.name() + ": " +
                                v.reason);
  Partition s = p.dual();
  long long sum_sq = 0;
  for (const auto& [len, r] : s.multiplicities())
    for (int k = 0; k < r; ++k) sum_sq += static_cast<long long>(len) * len;
  ComplexCentralizer out;
  std::vector<ReductiveFactor> factors;
  if (type.family == Family::A) {
    out.dim_v = static_cast<int>(sum_sq - 1);
    for (const auto& [len, r] : p.multiplicities())
      factors.push_back({FactorKind::gl_C, r, 0});
    out.c = ReductiveType::make(std::move(factors), /*determinant_one=*/true);
    return out;
  }
  int odd_rows = p.odd_length_row_count();
  if (type.family == Family::B || type.family == Family::D) {
    out.dim_v = static_cast<int>((sum_sq - odd_rows) / 2);
    for (const auto& [len, r] : p.multiplicities())
      factors.push_back(len % 2 == 0 ? ReductiveFactor{FactorKind::sp_C, r, 0}
                                     : ReductiveFactor{FactorKind::so_C, r, 0});
  } else {  // C
    out.dim_v = static_cast<int>((sum_sq + odd_rows) / 2);
    for (const auto& [len, r] : p.multiplicities())
      factors.push_back(len % 2 != 0 ? ReductiveFactor{FactorKind::sp_C, r, 0}
                                     : ReductiveFactor{FactorKind::so_C, r, 0});
  }
  out.c = ReductiveType::make(std::move(factors));
  return out;
}

ReductiveType real_triple_centralizer(const RealFormId& rf,
                                      const SignedYoungDiagram& d) {
  OrbitValidity v = validate_real_orbit(rf, d);
  if (!v.valid)
    throw std::invalid_argument("invalid orbit for " + rf.name() + ": " +
                                v.reason);
  std::vector<ReductiveFactor> factors;
  switch (rf.family) {
    case RealFamily::sl_R:
      for (const auto& [len, pq] : d.row_counts())
        factors.push_back({FactorKind::gl_R, pq.first + pq.second, 0});
      return ReductiveType::make(std::move(factors), /*determinant_one=*/true);
    case RealFamily::su_star:
      for (const auto& [len, pq] : d.row_counts())
        factors.push_back({FactorKind::u_star, 2 * (pq.first + pq.second), 0});
      return ReductiveType::make(std::move(factors), /*determinant_one=*/true);
    case RealFamily::su_pq:
      for (const auto& [len, pq] : d.row_counts())
        factors.push_back({FactorKind::u_pq, pq.first, pq.second});
      return ReductiveType::make(std::move(factors), /*determinant_one=*/true);
    case RealFamily::so_pq:
      for (const auto& [len, pq] : d.row_counts())
        factors.push_back(
            len % 2 == 0
                ? ReductiveFactor{FactorKind::sp_R, pq.first + pq.second, 0}
                : ReductiveFactor{FactorKind::so_pq, pq.first, pq.second});
      return ReductiveType::make(std::move(factors));
    case RealFamily::so_star:
      // The even-row factor is the quaternionic unitary algebra
      // sp(2p_i, 2q_i); the source notation for it varies.
      for (const auto& [len, pq] : d.row_counts())
        factors.push_back(
            len % 2 == 0
                ? ReductiveFactor{FactorKind::sp_pq, 2 * pq.first, 2 * pq.second}
                : ReductiveFactor{FactorKind::so_star,
                                  2 * (pq.first + pq.second), 0});
      return ReductiveType::make(std::move(factors));
    case RealFamily::sp_R:
      for (const auto& [len, pq] : d.row_counts())
        factors.push_back(
            len % 2 != 0
                ? ReductiveFactor{FactorKind::sp_R, pq.first + pq.second, 0}
                : ReductiveFactor{FactorKind::so_pq, pq.first, pq.second});
      return ReductiveType::make(std::move(factors));
    case RealFamily::sp_pq:
      for (const auto& [len, pq] : d.row_counts())
        factors.push_back(
            len % 2 != 0
                ? ReductiveFactor{FactorKind::sp_pq, 2 * pq.first, 2 * pq.second}
                : ReductiveFactor{FactorKind::so_star,
                                  2 * (pq.first + pq.second), 0});
      return ReductiveType::make(std::move(factors));
    default:
      throw std::logic_error("unknown real family");
  }
}

}  // namespace magical
