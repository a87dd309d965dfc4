#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "geohull/error.hpp"
#include "geohull/reduction.hpp"

namespace geohull {

namespace {

std::string plural(std::size_t count, const std::string& word) {
  return std::to_string(count) + " " + word + (count == 1 ? "" : "s");
}

std::string literal_text(const Literal& lit) {
  return (lit.positive ? "x" : "-x") + std::to_string(lit.variable);
}

}  // namespace

std::vector<std::string> validate_restricted(const RestrictedCnf& cnf) {
  std::vector<std::string> violations;
  const std::size_t n = cnf.variable_count;
  if (n == 0) violations.emplace_back("variable count must be positive");

  // Distinct clauses holding each literal, indexed by variable-1.
  std::vector<std::vector<std::size_t>> positive(n);
  std::vector<std::vector<std::size_t>> negative(n);
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    const Clause& clause = cnf.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1) + ": ";
    if (clause.empty()) violations.push_back(where + "empty clause");
    if (clause.size() > 3) {
      violations.push_back(where + "clause size " + std::to_string(clause.size()) + " > 3");
    }
    for (std::size_t t = 0; t < clause.size(); ++t) {
      const Literal& lit = clause[t];
      if (lit.variable == 0 || lit.variable > n) {
        violations.push_back(where + "variable " + std::to_string(lit.variable) +
                             " outside 1.." + std::to_string(n));
        continue;
      }
      if (std::find(clause.begin(), clause.begin() + static_cast<std::ptrdiff_t>(t), lit) !=
          clause.begin() + static_cast<std::ptrdiff_t>(t)) {
        violations.push_back(where + "literal " + literal_text(lit) + " repeated");
        continue;
      }
      (lit.positive ? positive : negative)[lit.variable - 1].push_back(j);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "variable " + std::to_string(i + 1) + ": ";
    if (positive[i].size() != 2) {
      violations.push_back(where + plural(positive[i].size(), "positive occurrence") +
                           ", expected 2");
    }
    if (negative[i].size() != 1) {
      violations.push_back(where + plural(negative[i].size(), "negative occurrence") +
                           ", expected 1");
    }
    for (std::size_t j : negative[i]) {
      if (std::find(positive[i].begin(), positive[i].end(), j) != positive[i].end()) {
        violations.push_back(where + "both polarities in clause " + std::to_string(j + 1) +
                             ", occurrence clauses must be distinct");
      }
    }
  }
  return violations;
}

bool satisfies(const RestrictedCnf& cnf, const Assignment& a) {
  return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& clause) {
    return std::any_of(clause.begin(), clause.end(), [&](const Literal& lit) {
      return lit.variable >= 1 && lit.variable <= a.size() && a[lit.variable - 1] == lit.positive;
    });
  });
}

std::vector<Assignment> satisfying_assignments(const RestrictedCnf& cnf, std::size_t max_variables) {
  const std::size_t n = cnf.variable_count;
  if (n > max_variables || n >= 63) {
    throw Error(ErrorCode::TooLarge, "exhaustive satisfiability limited to " +
                                         std::to_string(max_variables) + " variables, got " +
                                         std::to_string(n));
  }
  std::vector<Assignment> found;
  Assignment a(n, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) a[i] = ((bits >> i) & 1U) != 0;
    if (satisfies(cnf, a)) found.push_back(a);
  }
  return found;
}

// ---------------------------------------------------------------------------
// DIMACS

RestrictedCnf read_dimacs(std::istream& in) {
  RestrictedCnf cnf;
  std::optional<std::size_t> declared_clauses;
  Clause current;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c" || first.front() == 'c') continue;
    if (first == "%") break;
    if (first == "p") {
      std::string format;
      long long n = -1;
      long long m = -1;
      std::string extra;
      if (declared_clauses) fail("duplicate problem line");
      if (!(tokens >> format >> n >> m) || format != "cnf" || n < 0 || m < 0 || (tokens >> extra)) {
        fail("expected 'p cnf <variables> <clauses>'");
      }
      cnf.variable_count = static_cast<std::size_t>(n);
      declared_clauses = static_cast<std::size_t>(m);
      continue;
    }
    if (!declared_clauses) fail("clause before the problem line");
    std::string token = first;
    do {
      long long value = 0;
      auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || end != token.data() + token.size()) {
        fail("bad literal '" + token + "'");
      }
      if (value == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto variable = static_cast<std::size_t>(value < 0 ? -value : value);
      if (variable > cnf.variable_count) {
        fail("variable " + std::to_string(variable) + " exceeds declared count " +
             std::to_string(cnf.variable_count));
      }
      current.push_back({static_cast<std::uint32_t>(variable), value > 0});
    } while (tokens >> token);
  }
  if (!declared_clauses) fail("missing problem line");
  if (!current.empty()) fail("last clause not terminated by 0");
  if (cnf.clauses.size() != *declared_clauses) {
    fail("declared " + std::to_string(*declared_clauses) + " clauses, found " +
         std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

RestrictedCnf read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const RestrictedCnf& cnf) {
  out << "p cnf " << cnf.variable_count << ' ' << cnf.clauses.size() << '\n';
  for (const Clause& clause : cnf.clauses) {
    for (const Literal& lit : clause) {
      out << (lit.positive ? "" : "-") << lit.variable << ' ';
    }
    out << "0\n";
  }
}

// ---------------------------------------------------------------------------
// Generator
//
// Picks a clause count m in [max(3, n), 3n], shuffles the 3n literal
// occurrences and deals them round-robin from a random starting clause,
// rejecting clauses that are full or already mention the variable. Once the
// remaining occurrences equal the number of empty clauses, only empty
// clauses are accepted. Dead ends restart with the next random draws.
// Only raw mt19937_64 output is used so instances are portable across
// standard libraries.

RestrictedCnf random_restricted_cnf(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::InvalidInstance, "generator needs at least one variable");
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

  const std::size_t lo = std::max<std::size_t>(3, n);
  const std::size_t hi = 3 * n;
  const std::size_t m = lo + below(hi - lo + 1);

  std::vector<Literal> pool;
  for (std::uint32_t i = 1; i <= n; ++i) {
    pool.push_back({i, true});
    pool.push_back({i, true});
    pool.push_back({i, false});
  }

  while (true) {
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[below(i)]);
    std::vector<Clause> clauses(m);
    std::size_t empty = m;
    bool dead_end = false;
    for (std::size_t t = 0; t < pool.size() && !dead_end; ++t) {
      const Literal lit = pool[t];
      const std::size_t remaining = pool.size() - t;
      const std::size_t start = below(m);
      dead_end = true;
      for (std::size_t step = 0; step < m; ++step) {
        Clause& clause = clauses[(start + step) % m];
        if (clause.size() == 3) continue;
        if (remaining == empty && !clause.empty()) continue;
        if (std::any_of(clause.begin(), clause.end(),
                        [&](const Literal& other) { return other.variable == lit.variable; })) {
          continue;
        }
        if (clause.empty()) --empty;
        clause.push_back(lit);
        dead_end = false;
        break;
      }
    }
    if (dead_end || empty != 0) continue;
    for (Clause& clause : clauses) {
      std::sort(clause.begin(), clause.end(), [](const Literal& a, const Literal& b) {
        return a.variable < b.variable;
      });
    }
    return RestrictedCnf{n, std::move(clauses)};
  }
}

}  // namespace geohull
