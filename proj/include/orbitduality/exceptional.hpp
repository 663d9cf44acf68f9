#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "orbitduality/infchar.hpp"

namespace Eigen {
template <>
struct NumTraits<orbitduality::Rational> : GenericNumTraits<orbitduality::Rational> {
  using Real = orbitduality::Rational;
  using NonInteger = orbitduality::Rational;
  using Nested = orbitduality::Rational;
  enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 1, AddCost = 3, MulCost = 3 };
};
}  // namespace Eigen

namespace orbitduality {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = std::vector<Rational>;

enum class Group { G2, F4, E6, E7, E8 };
Group group_from_string(const std::string& s);
std::string to_string(Group g);
int group_rank(Group g);

// "(1,1,2,2)/4" <-> vector of rationals.
QVec parse_qvec(const std::string& s);
std::string to_string(const QVec& v);

struct LARow {
  std::string datum;  // grouping key: rows with the same key share one LA datum
  std::string orbit_dual, M_orbit, d_S, r_O;
  QVec gamma_M;
  std::optional<QVec> gamma_LA, gamma_D;  // absent on continuation rows
};

struct GammaRow {
  std::string datum, orbit, L, R, R_orbit;
  std::string abar_R, A_L, A, Gamma, method;
};

struct Tables {
  Group group = Group::G2;
  std::vector<LARow> la;
  std::vector<GammaRow> gamma;
};

// ORBITDUALITY_TABLES if set, else the data directory of the source tree.
std::string tables_dir();
Tables load_tables(Group g, const std::string& dir = tables_dir());
// Rows with the given dual orbit, optionally narrowed to one M orbit label.
std::vector<LARow> table_lookup(const Tables& t, const std::string& orbit_dual, const std::string& M_orbit = "");

// Root system in simple-root coordinates. dual = true uses the transposed
// Cartan matrix (long and short roots exchanged).
struct RootSystem {
  Group group = Group::G2;
  bool dual = false;
  QMatrix cartan;
  QMatrix simple_gram;    // (a_i, a_j)
  QMatrix coweight_gram;  // inverse of simple_gram
  std::vector<std::vector<int>> positive;
};
RootSystem root_system(Group g, bool dual = false);

QMatrix inverse(const QMatrix& m);
bool positive_definite(const QMatrix& m);
// Positive roots of the system with the given simple-root Gram matrix,
// as coefficient vectors.
std::vector<std::vector<int>> positive_roots(const QMatrix& gram);

struct TypeComponent {
  char letter = 'A';
  int rank = 0;
  auto operator<=>(const TypeComponent&) const = default;
};
using CartanType = std::vector<TypeComponent>;  // sorted

CartanType classify(const RootSystem& rs, const std::vector<std::vector<int>>& subsystem);
// Strips tildes, primes and (a_i)/(b_i) labels; "2A2" -> A2+A2; "0" -> empty.
CartanType type_from_label(const std::string& label);
// Same, in the order written, for pairing with factor orbits.
std::vector<TypeComponent> components_in_order(const std::string& label);
std::string to_string(const CartanType& t);

struct SubsystemTypes {
  CartanType integral;
  CartanType singular;
  bool operator==(const SubsystemTypes&) const = default;
};
// gamma in fundamental coweight coordinates: <alpha, gamma> = sum_j k_j c_j.
SubsystemTypes subsystem_classify(const RootSystem& rs, const QVec& gamma);
Rational norm2(const RootSystem& rs, const QVec& gamma);

// The convention under which every LA row's gamma_M classifies as its M orbit's
// type; nullopt if neither does.
std::optional<bool> matching_convention(const Tables& t);

struct TableReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};
// (a) gamma_LA = gamma_D; (b) gamma_LA is the minimum-norm gamma_M of its group.
TableReport verify_tables(const Tables& t, const RootSystem& rs);
// (c) rank Abar(O_R) = rank Gamma, and the Abar column agrees with markable
// parts of the classical factors of R.
TableReport verify_gamma_table(const Tables& t);
// Each row's gamma_M classifies to the type of its M orbit.
TableReport verify_classification(const Tables& t, const RootSystem& rs);
// Partial minimality: no lattice point of the integral subsystem's coweight
// lattice inside ||rho|| is shorter than gamma_M with the same type pair.
TableReport verify_shell(const Tables& t, const RootSystem& rs);

// "1" -> 0, "Z2"/"S2" -> 1.
int group_label_rank(const std::string& s);

}  // namespace orbitduality
