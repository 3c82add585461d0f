#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dimjump/groebner.hpp"
#include "dimjump/task.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace testing;

namespace {

Polynomial random_poly(const RingPtr& R, std::mt19937& rng, int max_terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), ex(0, max_exp), coef(-9, 9), den(1, 4);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(R->num_vars());
    for (auto& v : e) v = ex(rng);
    mpq_class c(coef(rng), R->field().is_rationals() ? den(rng) : 1);
    c.canonicalize();
    terms.push_back({R->field().from_rational(c), R->monomial(e)});
  }
  return Polynomial(R, std::move(terms));
}

std::vector<TaskFile> corpus(OrderKind order) {
  std::vector<TaskFile> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(DIMJUMP_CORPUS_DIR))
    if (e.path().extension() == ".task") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::ostringstream ss;
    ss << in.rdbuf();
    out.push_back(parse_task(ss.str(), TaskOverrides{{}, order}));
  }
  return out;
}

// Graded modules over the base ring from the corpus, as (label, module).
std::vector<std::pair<std::string, FPModule>> base_graded(const std::vector<TaskFile>& tasks) {
  std::vector<std::pair<std::string, FPModule>> out;
  for (const auto& t : tasks)
    for (const auto& m : t.modules)
      if (m.module && !m.over_rees && m.kind != ModuleDef::Kind::rees && m.module->graded())
        out.emplace_back(describe(*t.ring) + " " + m.name, *m.module);
  return out;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  for (Field k : {Field::rationals(), Field::prime(7), Field::prime(2147483647)}) {
    auto R = make_ring(k, {{"x", 1}, {"y", 2}, {"z", 1}});
    std::mt19937 rng(k.characteristic() + 1);
    for (int i = 0; i < 10000; ++i) {
      Polynomial a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      REQUIRE(a * Polynomial::constant(R, 1) == a);
      REQUIRE((a * Polynomial(R)).is_zero());
    }
  }
}

TEST_CASE("homogenize then dehomogenize is the identity") {
  auto R = qq({{"x", 1}, {"y", 2}});
  auto H = adjoin_variable(R, "h");
  std::mt19937 rng(5);
  for (int i = 0; i < 2000; ++i) {
    Polynomial p = random_poly(R, rng);
    if (p.is_zero()) continue;
    Polynomial hp = homogenize(p, H);
    REQUIRE(is_homogeneous(hp).homogeneous);
    REQUIRE(hp.weighted_degree() == p.weighted_degree());
    REQUIRE(dehomogenize(hp, H) == p);
    REQUIRE(dehomogenize(homogenize(p, H, *p.weighted_degree() + 3), H) == p);
  }
}

TEST_CASE("profiles are stable under window changes") {
  auto tasks = corpus(OrderKind::grevlex);
  auto mods = base_graded(tasks);
  REQUIRE(mods.size() >= 10);
  for (const auto& [name, M] : mods) {
    INFO(name);
    auto wide = M.hilbert_profile(-10, 15);
    auto narrow = M.hilbert_profile(-3, 7);
    CHECK(std::vector<std::size_t>(wide.begin() + 7, wide.begin() + 18) == narrow);
  }
  auto R = qq({{"x", 1}, {"y", 1}});
  ExtCalculator calc(residue_field(R), free_module(R, {0}));
  for (int q = 0; q <= 2; ++q) {
    auto wide = calc.profile(q, Window{-12, 12});
    auto narrow = calc.profile(q, Window{-4, 1});
    for (int d = -4; d <= 1; ++d) CHECK(wide.at(d) == narrow.at(d));
  }
}

TEST_CASE("hilbert profiles do not depend on the monomial order") {
  auto a = base_graded(corpus(OrderKind::grevlex));
  auto b = base_graded(corpus(OrderKind::lex));
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() >= 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    INFO(a[i].first);
    CHECK(a[i].second.hilbert_profile(-10, 15) == b[i].second.hilbert_profile(-10, 15));
  }
}

TEST_CASE("Ext profiles do not depend on the monomial order") {
  auto a = base_graded(corpus(OrderKind::grevlex));
  auto b = base_graded(corpus(OrderKind::lex));
  Window w{-8, 6};
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!same_ring(a[i].second.ring(), a[j].second.ring())) continue;
      ExtCalculator ca(a[i].second, a[j].second), cb(b[i].second, b[j].second);
      for (int q = 0; q <= 2; ++q) {
        INFO(a[i].first << " vs " << a[j].first << " q=" << q);
        CHECK(ca.profile(q, w).dims == cb.profile(q, w).dims);
      }
      ++pairs;
    }
  CHECK(pairs >= 10);
}

TEST_CASE("Ext^1(A/f, A/g) is A/(f, g) twisted by deg f") {
  auto R = qq({{"x", 1}, {"y", 1}});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(1, 3);
  Window w{-8, 6};
  for (int i = 0; i < 12; ++i) {
    int a = deg(rng), b = deg(rng);
    auto form = [&](int e) {
      Polynomial p(R);
      while (p.is_zero()) {
        std::vector<Term> t;
        for (auto& ex : oracle::exponents_of_degree(*R, e)) t.push_back({mpq_class(int(rng() % 5) - 2), R->monomial(ex)});
        p = Polynomial(R, t);
      }
      return p;
    };
    Polynomial f = form(a), g = form(b);
    FPModule Af = FPModule::coker(GradedMatrix::from_rows(FreeModule{R, {a}}, FreeModule{R, {0}}, {{f}}));
    FPModule Ag = FPModule::coker(GradedMatrix::from_rows(FreeModule{R, {b}}, FreeModule{R, {0}}, {{g}}));
    FPModule Afg = FPModule::coker(GradedMatrix::from_rows(FreeModule{R, {a, b}}, FreeModule{R, {0}}, {{f, g}}));
    auto e1 = ext_profile(Af, Ag, 1, w);
    auto e1_swapped = ext_profile(Ag, Af, 1, w);
    INFO("f = " << f.to_string() << ", g = " << g.to_string());
    for (int d = w.lo; d <= w.hi; ++d) {
      std::size_t expect = oracle::quotient_dim(FreeModule{R, {0}}, {Vec::single(f, 0), Vec::single(g, 0)}, d + a);
      CHECK(e1.at(d) == expect);
      CHECK(Afg.hilbert_profile(d + a, d + a)[0] == expect);
      // Balance: both orders give A/(f, g), shifted by the other degree.
      if (d + a - b >= w.lo && d + a - b <= w.hi) CHECK(e1_swapped.at(d + a - b) == e1.at(d));
    }
  }
}

TEST_CASE("canonical Rees modules of corpus modules") {
  auto tasks = corpus(OrderKind::grevlex);
  auto mods = base_graded(tasks);
  for (const auto& [name, M] : mods) {
    INFO(name);
    ReesRing R = rees_ring(M.ring());
    auto data = rees_module(R, M);
    const FPModule& Mt = data.tilde;
    CHECK(t_regular(R, Mt));
    // Partial sums: rs(M)_e = sum over j <= e of M_j.
    auto base = M.hilbert_profile(-30, 12);
    auto rees = Mt.hilbert_profile(0, 12);
    std::size_t acc = 0;
    for (int j = -30; j < 0; ++j) acc += base[std::size_t(j + 30)];
    for (int e = 0; e <= 12; ++e) {
      acc += base[std::size_t(e + 30)];
      CHECK(rees[std::size_t(e)] == acc);
    }
    CHECK(sp0(R, Mt).hilbert_profile(-10, 15) == M.hilbert_profile(-10, 15));
    CHECK(sp1(R, Mt).dimension() == M.as_ungraded().dimension());
  }
}
