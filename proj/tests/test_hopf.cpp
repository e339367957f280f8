#include <random>

#include "ckhopf/cut_coproduct.hpp"
#include "ckhopf/hopf.hpp"
#include "doctest.h"

using namespace ckhopf;

namespace {

using Q = Rational;
using P = BivariatePoly;

const P q1 = P::q1();
const P q2 = P::q2();

template <Coefficient C>
Element<C> el(std::string_view forest, C c = one<C>()) {
  return basis_element<C>(parse_forest(forest), c);
}

template <Coefficient C>
Tensor<C> tk(std::string_view a, std::string_view b, C c = one<C>()) {
  return Tensor<C>::monomial(TensorKey{parse_forest(a), parse_forest(b)}, c);
}

template <Coefficient C>
Element<C> random_element(std::mt19937_64& rng, std::size_t max_degree) {
  static const auto basis = forests_up_to(4);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), count(1, 4);
  Element<C> a;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const Forest& f = basis[pick(rng)];
    if (f.degree() > max_degree) continue;
    a.add(f, C(Rational(num(rng), den(rng))));
  }
  return a;
}

CoproductEngine<P> symbolic_engine() { return {Twisting<P>::qpower(q1), Twisting<P>::qpower(q2)}; }
CoproductEngine<Q> ck_engine() { return {Twisting<Q>::identity(), Twisting<Q>::counit_unit()}; }

}  // namespace

TEST_CASE("product") {
  const auto a = el<Q>("[[]][]", 3) + el<Q>("1", Q(1, 2));
  CHECK(product(unit<Q>(), a) == a);
  CHECK(product(el<Q>("[]"), el<Q>("[]")) == el<Q>("[][]"));
  CHECK(product(el<Q>("[]", 2), el<Q>("[[]]", 3)) == el<Q>("[[]][]", 6));
  const auto b = el<Q>("[[][]]") + el<Q>("[]", -1);
  CHECK(product(a, b) == product(b, a));
}

TEST_CASE("lambda and counit") {
  CHECK(lambda_op(unit<Q>()) == el<Q>("[]"));
  CHECK(lambda_op(el<Q>("[]")) == el<Q>("[[]]"));
  CHECK(lambda_op(el<Q>("[[]][]")) == el<Q>("[[[]][]]"));
  CHECK(lambda_op(el<Q>("[[]][]", 5) + el<Q>("1", 2)) == el<Q>("[[[]][]]", 5) + el<Q>("[]", 2));
  CHECK(counit(unit<Q>()) == Q(1));
  CHECK(counit(el<Q>("[]")) == Q(0));
  CHECK(counit(el<Q>("1", 3) + el<Q>("[[]]", 5)) == Q(3));
}

TEST_CASE("counit kills the image of lambda") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) CHECK(counit(lambda_op(random_element<Q>(rng, 4))).is_zero());
}

TEST_CASE("twist_apply") {
  CHECK(twist_apply(Twisting<P>::qpower(q1), unit<P>()) == unit<P>());
  CHECK(twist_apply(Twisting<P>::qpower(q1), el<P>("[[]]")) == el<P>("[[]]", q1 * q1));
  CHECK(twist_apply(Twisting<Q>::convex(Q(1, 2), Q(1, 2)), el<Q>("[]")) == el<Q>("[]", Q(1, 2)));
  CHECK(twist_apply(Twisting<Q>::convex(Q(1, 2), Q(1, 2)), unit<Q>()) == unit<Q>());
  CHECK(twist_apply(Twisting<Q>::counit_unit(), el<Q>("1", 4) + el<Q>("[]")) == el<Q>("1", 4));
  CHECK(twist_apply(Twisting<Q>::identity(), el<Q>("[][]")) == el<Q>("[][]"));
  CHECK_THROWS_AS(Twisting<Q>::convex(Q(1, 2), Q(1, 3)), std::invalid_argument);
}

TEST_CASE("coproduct: worked examples") {
  // Delta(.) = 1 (x) . + . (x) 1 whenever sigma_i(1) = 1.
  const auto dot_expected = tk<Q>("1", "[]") + tk<Q>("[]", "1");
  CHECK(coproduct(el<Q>("[]"), Twisting<Q>::identity(), Twisting<Q>::counit_unit()) == dot_expected);
  CHECK(coproduct(el<Q>("[]"), Twisting<Q>::convex(Q(1, 3), Q(2, 3)), Twisting<Q>::identity()) == dot_expected);

  auto delta = symbolic_engine();
  CHECK(delta(el<P>("[[]]")) == tk<P>("1", "[[]]") + tk<P>("[[]]", "1") + tk<P>("[]", "[]", q1 + q2));

  const auto cherry = delta(el<P>("[[][]]"));
  const auto expected = tk<P>("1", "[[][]]") + tk<P>("[[][]]", "1") + tk<P>("[]", "[[]]", P(2) * q1) +
                        tk<P>("[][]", "[]", q1 * q1) + tk<P>("[[]]", "[]", P(2) * q2) +
                        tk<P>("[]", "[][]", q2 * q2);
  CHECK(cherry == expected);

  auto ck = ck_engine();
  CHECK(ck(el<Q>("[[][]]")) ==
        tk<Q>("1", "[[][]]") + tk<Q>("[[][]]", "1") + tk<Q>("[]", "[[]]", 2) + tk<Q>("[][]", "[]"));
}

TEST_CASE("cut oracle: worked examples") {
  CHECK(coproduct_ck_oracle<Q>(Tree()) == tk<Q>("1", "[]") + tk<Q>("[]", "1"));
  CHECK(coproduct_ck_oracle<Q>(parse_tree("[[]]")) == tk<Q>("1", "[[]]") + tk<Q>("[[]]", "1") + tk<Q>("[]", "[]"));
  CHECK(coproduct_ck_oracle<Q>(parse_tree("[[[]]]")) ==
        tk<Q>("1", "[[[]]]") + tk<Q>("[[[]]]", "1") + tk<Q>("[]", "[[]]") + tk<Q>("[[]]", "[]"));
}

TEST_CASE("recursive coproduct at (Identity, CounitUnit) equals the cut oracle") {
  auto ck = ck_engine();
  // The same pair spelled as q-powers (q1, q2) = (1, 0).
  CoproductEngine<Q> q10(Twisting<Q>::qpower(1), Twisting<Q>::qpower(0));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const auto oracle = coproduct_ck_oracle<Q>(t);
      CHECK(ck.of_tree(t) == oracle);
      CHECK(q10.of_tree(t) == oracle);
    }
  }
  for (const auto& f : forests_up_to(5)) CHECK(ck.of_forest(f) == coproduct_ck_oracle<Q>(f));
}

TEST_CASE("symbolic coproduct specializes to numeric parameters") {
  auto delta = symbolic_engine();
  const Q v1(2, 3), v2(-3);
  CoproductEngine<Q> numeric(Twisting<Q>::qpower(v1), Twisting<Q>::qpower(v2));
  for (const auto& f : forests_up_to(5)) {
    Tensor<Q> substituted;
    for (const auto& [k, c] : delta.of_forest(f)) substituted.add(k, c.substitute(v1, v2));
    CHECK(substituted == numeric.of_forest(f));
  }
}

TEST_CASE("coassociativity and counit laws, symbolic") {
  auto delta = symbolic_engine();
  for (const auto& f : forests_up_to(5)) {
    const auto d = delta.of_forest(f);
    CHECK(delta.in_slot(d, 0) == delta.in_slot(d, 1));

    Element<P> left, right;
    for (const auto& [k, c] : d) {
      if (k[0].is_empty()) left.add(k[1], c);
      if (k[1].is_empty()) right.add(k[0], c);
    }
    CHECK(left == basis_element<P>(f));
    CHECK(right == basis_element<P>(f));
  }
}

TEST_CASE("grading and defining equation") {
  auto delta = symbolic_engine();
  for (const auto& f : forests_up_to(5)) {
    for (const auto& [k, c] : delta.of_forest(f)) CHECK(k[0].degree() + k[1].degree() == f.degree());
    CHECK(delta(lambda_op(basis_element<P>(f))) == delta.graft_twisted(delta.of_forest(f)));
  }
  CoproductEngine<Q> convex(Twisting<Q>::convex(Q(1, 2), Q(1, 2)), Twisting<Q>::convex(Q(1, 2), Q(1, 2)));
  for (const auto& f : forests_up_to(5)) {
    CHECK(convex(lambda_op(basis_element<Q>(f))) == convex.graft_twisted(convex.of_forest(f)));
  }
}

TEST_CASE("coproduct is an algebra map") {
  std::mt19937_64 rng(99);
  auto ck = ck_engine();
  CoproductEngine<Q> other(Twisting<Q>::qpower(Q(2)), Twisting<Q>::qpower(Q(-1, 2)));
  for (int i = 0; i < 30; ++i) {
    const auto a = random_element<Q>(rng, 2);
    const auto b = random_element<Q>(rng, 2);
    CHECK(ck(product(a, b)) == tensor_mul(ck(a), ck(b)));
    CHECK(other(product(a, b)) == tensor_mul(other(a), other(b)));
  }
}

TEST_CASE("twisting validation") {
  auto delta = symbolic_engine();
  CHECK(validate_twisting(Twisting<P>::identity(), delta, 4).passed());
  CHECK(validate_twisting(Twisting<P>::qpower(q1), delta, 5).passed());
  CHECK(validate_twisting(Twisting<P>::qpower(q2), delta, 5).passed());

  auto ck = ck_engine();
  CHECK(validate_twisting(Twisting<Q>::identity(), ck, 5).passed());
  CHECK(validate_twisting(Twisting<Q>::counit_unit(), ck, 5).passed());

  // sigma(F) = F + 1 breaks the counit condition on the empty forest.
  const auto broken = validate_linear_map<Q>(
      "F+1", [](const Forest& f) { return basis_element<Q>(f) + unit<Q>(); }, ck, 3);
  CHECK_FALSE(broken.passed());
  REQUIRE(!broken.failures.empty());
  CHECK(broken.failures.front().input == "1");
  CHECK(broken.failures.front().note == "counit");
  CHECK(broken.failures.front().lhs == "2");
}

TEST_CASE("convex twisting fails comultiplicativity on non-primitive forests") {
  // (1/2 id + 1/2 u eps) applied to a forest of positive degree halves it,
  // while (sigma (x) sigma) quarters the non-primitive part of its coproduct.
  const auto half = Twisting<Q>::convex(Q(1, 2), Q(1, 2));
  CoproductEngine<Q> delta(half, half);
  const auto report = validate_twisting(half, delta, 2);
  CHECK_FALSE(report.passed());
  bool saw_dot_dot = false;
  for (const auto& w : report.failures) saw_dot_dot = saw_dot_dot || w.input == "[][]";
  CHECK(saw_dot_dot);
  for (const auto& w : report.failures) CHECK(w.note == "comultiplicative");
}

TEST_CASE("antipode") {
  auto ck = ck_engine();
  Antipode<Q> s(ck);
  CHECK(s(unit<Q>()) == unit<Q>());
  CHECK(s(el<Q>("[]")) == el<Q>("[]", -1));
  CHECK(s(el<Q>("[[]]")) == el<Q>("[][]") - el<Q>("[[]]"));
  CHECK(antipode(el<Q>("[[]]"), Twisting<Q>::identity(), Twisting<Q>::counit_unit()) == el<Q>("[][]") - el<Q>("[[]]"));

  auto delta = symbolic_engine();
  Antipode<P> sp(delta);
  for (const auto& f : forests_up_to(5)) {
    const auto d = delta.of_forest(f);
    const auto expected = f.is_empty() ? unit<P>() : Element<P>();
    const auto left = multiply_slots(tensor_map<P>(d, [&](const Forest& x) { return sp.of_forest(x); },
                                                   [](const Forest& x) { return basis_element<P>(x); }));
    const auto right = multiply_slots(tensor_map<P>(d, [](const Forest& x) { return basis_element<P>(x); },
                                                    [&](const Forest& x) { return sp.of_forest(x); }));
    CHECK(left == expected);
    CHECK(right == expected);
  }
}

TEST_CASE("antipode is multiplicative on a commutative algebra") {
  auto ck = ck_engine();
  Antipode<Q> s(ck);
  for (const auto& f : forests_up_to(4)) {
    Element<Q> prod = unit<Q>();
    for (const auto& t : f.trees()) prod = product(prod, s.of_forest(Forest::of(t)));
    CHECK(s.of_forest(f) == prod);
  }
}

TEST_CASE("generators") {
  const GeneratorSet gens({"g", "h"});
  const auto g = gens.generator<Q>("g");
  CHECK_THROWS_AS(gens.generator<Q>("x"), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({"1bad"}), std::invalid_argument);
  auto ck = ck_engine();
  CHECK(ck(g) == tk<Q>("1", "{g}") + tk<Q>("{g}", "1"));
  CHECK(counit(g).is_zero());
  CHECK(lambda_op(g) == el<Q>("[{g}]"));

  auto delta = symbolic_engine();
  const auto decorated = lambda_op(product(gens.generator<P>("g"), el<P>("[]")));
  CHECK(decorated == el<P>("[{g}[]]"));
  const auto d = delta(decorated);
  CHECK(delta.in_slot(d, 0) == delta.in_slot(d, 1));
  CHECK(delta(lambda_op(decorated)) == delta.graft_twisted(d));

  Antipode<Q> s(ck);
  CHECK(s(g) == el<Q>("{g}", -1));
  const auto x = lambda_op(product(g, el<Q>("[]")));
  CHECK(multiply_slots(tensor_map<Q>(ck(x), [&](const Forest& f) { return s.of_forest(f); },
                                     [](const Forest& f) { return basis_element<Q>(f); }))
            .is_zero());
}

TEST_CASE("formatting") {
  auto delta = symbolic_engine();
  CHECK(format_tensor(delta(el<P>("[[]]"))) == "1⊗[[]] + [[]]⊗1 + (q2 + q1)·[]⊗[]");
  CHECK(format_element(el<Q>("[][]") - el<Q>("[[]]")) == "-[[]] + [][]");
  CHECK(format_element(el<Q>("1", Q(1, 2))) == "1/2·1");
  CHECK(format_element(Element<Q>()) == "0");
}
