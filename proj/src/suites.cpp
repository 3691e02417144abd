#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "checks.hpp"
#include "clr/network.hpp"
#include "clr/rmatrices.hpp"
#include "clr/seeds.hpp"

namespace clr {

using namespace detail;

namespace {

constexpr std::uint64_t P61 = 2305843009213693951ULL;

std::string nm(const std::string& base, int n) { return base + "-n" + std::to_string(n); }

// Local vertex notation around M = M_1: "3" is (1,3), "3-" is (0,3), "3+" is (2,3).
Vertex local(const std::string& t)
{
    int i = std::stoi(t);
    int j = 1;
    if (t.back() == '-') j = 0;
    if (t.back() == '+') j = 2;
    return Vertex::grid(j, i);
}

// Product of x_t over local tokens; "a>b" is the frozen X_{a,b}.
Poly xmono(const VarSetPtr& v, const std::string& text)
{
    std::istringstream is(text);
    std::string t;
    Poly r = poly_const(v, 1);
    while (is >> t) {
        auto gt = t.find('>');
        Vertex w = gt == std::string::npos ? local(t) : Vertex::arrow(local(t.substr(0, gt)), local(t.substr(gt + 1)));
        r *= poly_var(v, xname(w));
    }
    return r;
}

Poly ymono(const VarSetPtr& v, const std::string& text)
{
    std::istringstream is(text);
    std::string t;
    Poly r = poly_const(v, 1);
    while (is >> t) r *= poly_var(v, yname(local(t)));
    return r;
}

std::vector<Fp> random_point(int size, std::mt19937_64& rng)
{
    std::vector<Fp> r;
    for (int a = 0; a < size; ++a) r.emplace_back(random_nonzero(P61, rng), P61);
    return r;
}

// Image of a point under the pullback of a substitution: compose(F, G) at pt is G at F(pt).
std::vector<Fp> push(const std::vector<Fraction>& f, const std::vector<Fp>& pt)
{
    std::vector<Fp> r;
    r.reserve(f.size());
    for (auto& x : f) r.push_back(x.evaluate(pt));
    return r;
}

std::vector<Fp> push_all(const std::vector<const std::vector<Fraction>*>& maps, std::vector<Fp> pt)
{
    for (auto* f : maps) pt = push(*f, pt);
    return pt;
}

std::uint64_t point_seed(const std::string& id)
{
    std::uint64_t h = 7;
    for (unsigned char c : id) h = h * 131 + c;
    return h;
}

// (f o g)(y_v) = g(y_v) with y_u -> f(y_u), on tropical points.
std::vector<TropicalPoint> trop_compose(const std::vector<TropicalPoint>& f, const std::vector<TropicalPoint>& g)
{
    std::vector<TropicalPoint> r;
    for (auto& gv : g) {
        TropicalPoint t = TropicalPoint::unit(gv.size());
        for (std::size_t u = 0; u < gv.size(); ++u) {
            if (gv[u]) t = trop_mul(t, f[u].pow(gv[u]));
        }
        r.push_back(t);
    }
    return r;
}

NCLaurent qgen(const CylNetwork& net, int j, int i) { return NCLaurent::generator(net.comm, net.weight_index(j, i)); }

std::string specs_str(const std::vector<Interval>& spec)
{
    std::string s;
    for (auto& iv : spec) s += "(" + std::to_string(iv.a) + "," + std::to_string(iv.b) + ")";
    return s;
}

std::vector<std::vector<int>> partitions_in_box(int rows, int cols)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int maxpart) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            rec(p);
            cur.pop_back();
        }
    };
    rec(cols);
    return out;
}

// Skew shapes with no empty rows or columns and at most max_cells boxes.
std::vector<SkewShape> small_skew_shapes(int max_cells)
{
    std::vector<SkewShape> out;
    auto parts = partitions_in_box(max_cells, max_cells);
    for (auto& lam : parts) {
        if (lam.empty()) continue;
        for (auto& mu : parts) {
            if (mu.size() > lam.size()) continue;
            bool ok = true;
            for (std::size_t i = 0; i < lam.size(); ++i) ok = ok && lam[i] > (i < mu.size() ? mu[i] : 0);
            if (!ok) continue;
            auto s = SkewShape::from_partitions(lam, mu);
            if (s.size() > max_cells) continue;
            for (auto& c : s.columns()) ok = ok && c.size() > 0;
            if (ok) out.push_back(s);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

void paper_examples(std::vector<Check>& out)
{
    const std::string S = "paper-examples/";
    out.push_back(exact_check(S + "geometric-R-q1-n4", "geometric R-matrix, image of q_1", {{"n", 4}}, [] {
        Mismatches mm;
        auto v = pq_vars(4);
        auto R = geometric_R(v, 4, var_indices(v, pq_names(4, 'p')), var_indices(v, pq_names(4, 'q')));
        auto p = [&](int i) { return Fraction(poly_var(v, "p" + std::to_string(i))); };
        auto q = [&](int i) { return Fraction(poly_var(v, "q" + std::to_string(i))); };
        Fraction num = q(1) * q(2) * q(3) + p(4) * q(1) * q(2) + p(3) * p(4) * q(1) + p(2) * p(3) * p(4);
        Fraction den = q(2) * q(3) * q(4) + p(1) * q(2) * q(3) + p(4) * p(1) * q(2) + p(3) * p(4) * p(1);
        mm.expect_eq(R[static_cast<std::size_t>(v->index("q1"))], p(1) * num / den, "R(q1)");
        return mm.result();
    }));

    out.push_back(exact_check(S + "enriched-R-x1-n4", "enriched cluster R-matrix, image of x_1", {{"n", 4}}, [] {
        Mismatches mm;
        auto v = XSeed::initial(build_Q_tilde(4, 2)).vars();
        auto r = closed_tilde_R(v, 4, 1);
        Poly expect = xmono(v, "2- 3 4 1+ 1>2 2+>2 3->2 3+>3 4->3 4+>4 1->4") +
                      xmono(v, "3- 4 1 2+ 2>3 3+>3 4->3 4+>4 1->4 2>2- 2>1+") +
                      xmono(v, "4- 1 2 3+ 3>4 4+>4 1->4 2>2- 2>1+ 3>3- 3>2+") +
                      xmono(v, "1- 2 3 4+ 4>1 2>2- 2>1+ 3>3- 3>2+ 4>4- 4>3+");
        mm.expect_eq(r[static_cast<std::size_t>(v->index(xname(local("1"))))] * xmono(v, "2 3 4"), expect, "x1 x2 x3 x4 R(x1)");
        // Mutating along the sequence gives the same.
        auto q = build_Q_tilde(4, 2);
        auto s = apply_word(XSeed::initial(q), r_sequence_word(4, 1, 1, &q));
        mm.expect(s.cluster() == r, "mutation sequence differs from the closed form");
        return mm.result();
    }));

    out.push_back(exact_check(S + "simple-R-x1-n4", "cluster R-matrix, image of x_1", {{"n", 4}}, [] {
        Mismatches mm;
        auto v = XSeed::initial(build_Q(4, 2)).vars();
        auto r = closed_R_x(v, 4, 1);
        Poly expect = (xmono(v, "2- 3 4 1+") + xmono(v, "3- 4 1 2+") + xmono(v, "4- 1 2 3+") + xmono(v, "1- 2 3 4+")) *
                      xmono(v, "2 3 4").pow(-1);
        mm.expect_eq(r[static_cast<std::size_t>(v->index(xname(local("1"))))], expect, "R(x1)");
        return mm.result();
    }));

    out.push_back(exact_check(S + "classical-y-n3", "cluster R-matrix on y-variables", {{"n", 3}}, [] {
        Mismatches mm;
        auto v = YSeedUniversal::initial(build_Q(3, 2)).vars();
        auto r = closed_R_y_classical(v, 3, 2, 1);
        auto at = [&](const std::string& t) { return r[static_cast<std::size_t>(v->index(yname(local(t))))]; };
        auto P = [&](const std::string& a, const std::string& b, const std::string& c) {
            return Fraction(ymono(v, a) + ymono(v, b) + ymono(v, c));
        };
        mm.expect_eq(at("1"), P("", "3", "3 1").inverse() * Fraction(ymono(v, "2")).inverse() * P("", "1", "1 2"), "R(y1)");
        mm.expect_eq(at("1-"), P("", "1", "1 2").inverse() * Fraction(ymono(v, "1 1-")) * P("", "2", "2 3"), "R(y1-)");
        mm.expect_eq(at("1+"), P("", "2", "2 3").inverse() * Fraction(ymono(v, "2 1+")) * P("", "3", "3 1"), "R(y1+)");
        return mm.result();
    }));

    out.push_back(oracle_check(S + "quantum-y-seeds-n3", "quantum y-seeds along the R-sequence", {{"n", 3}}, [] {
        auto q = build_Q(3, 2);
        auto s0 = QuantumYSeed::initial(q);
        auto c = s0.comm();
        auto one = SkewExpr::constant(c, 1);
        auto eps = SkewExpr::eps_pow(c, 1);
        auto y = [&](const std::string& t) { return SkewExpr::gen(c, yname(local(t))); };
        auto D = [&](const SkewExpr& x) { return (one + eps * x.inv()).inv(); };
        auto U = [&](const SkewExpr& x) { return one + eps * x; };
        auto y2_1 = y("2") * D(y("1"));
        auto y3_2 = y("3") * U(y("1"));
        auto y1_3 = y("1").inv() * D(y2_1) * U(y3_2);
        SkewPairs all;
        auto table = [&](const QuantumYSeed& s, const std::vector<std::vector<SkewExpr>>& rows) {
            const char* suffix[] = {"-", "", "+"};
            for (int i = 1; i <= 3; ++i) {
                for (int col = 0; col < 3; ++col) {
                    all.push_back({s.y(local(std::to_string(i) + suffix[col])),
                                   rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(col)]});
                }
            }
        };
        auto s1 = s0.mutate(local("1"));
        auto s2 = s1.mutate(local("2"));
        auto s3 = s2.mutate(local("3"));
        auto sf = apply_word(s0, r_sequence_word(3, 1, 1));
        table(s1, {{y("1-") * D(y("1")), y("1").inv(), y("1+") * U(y("1"))},
                   {y("2-") * U(y("1")), y2_1, y("2+")},
                   {y("3-"), y("3") * U(y("1")), y("3+") * D(y("1"))}});
        table(s2, {{y("1-") * D(y("1")), y("1").inv() * D(y2_1), y("1+") * U(y("1"))},
                   {y("2-") * U(y("1")), y2_1.inv(), y("2+") * U(y2_1)},
                   {y("3-") * U(y2_1), y3_2, y("3+") * D(y("1"))}});
        table(s3, {{y("1-") * D(y("1")), y1_3, y("1+") * U(y("1"))},
                   {y("2-") * U(y("1")), y2_1.inv(), y("2+") * U(y2_1) * D(y3_2)},
                   {y("3-") * U(y2_1) * D(y3_2), y3_2.inv(), y("3+") * D(y("1"))}});
        table(sf, {{y("1-") * D(y("1")) * U(y1_3), y1_3.inv(), y("1+") * U(y("1")) * D(y1_3)},
                   {y("2-") * U(y("1")) * D(y1_3), y3_2.inv() * U(y1_3), y("2+") * U(y2_1) * D(y3_2)},
                   {y("3-") * U(y2_1) * D(y3_2), y2_1.inv() * D(y1_3), y("3+") * D(y("1")) * U(y1_3)}});
        return all;
    }));

    out.push_back(oracle_check(S + "quantum-y-R-n3", "quantum cluster R-matrix on y-variables", {{"n", 3}}, [] {
        auto q = build_Q(3, 2);
        auto c = lambda_y(q);
        auto R = quantum_cluster_R_y(c, 3, 1);
        auto one = SkewExpr::constant(c, 1);
        auto y = [&](const std::string& t) { return SkewExpr::gen(c, yname(local(t))); };
        auto e = [&](int k) { return SkewExpr::eps_pow(c, k); };
        auto a = [&](const std::string& u, const std::string& w) { return one + e(1) * y(u) + e(2) * y(u) * y(w); };
        auto at = [&](const std::string& t) { return R[static_cast<std::size_t>(c->index(yname(local(t))))]; };
        return SkewPairs{
            {at("1"), a("3", "1").inv() * y("2").inv() * a("1", "2")},
            {at("1-"), a("1", "2").inv() * e(1) * y("1") * y("1-") * a("2", "3")},
            {at("1+"), a("2", "3").inv() * e(1) * y("2") * y("1+") * a("3", "1")},
        };
    }));

    out.push_back(exact_check(S + "loop-e-n3-m4", "loop elementary symmetric functions", {{"n", 3}, {"m", 4}}, [] {
        Mismatches mm;
        auto net = CylNetwork::make(3, 4);
        auto q = [&](int j, int i) { return qgen(net, j, i); };
        mm.expect_eq(loop_e(net, 1, 1), q(1, 1) + q(2, 3) + q(3, 2) + q(4, 1), "e_1");
        mm.expect_eq(loop_e(net, 2, 1),
                     q(1, 1) * q(2, 1) + q(1, 1) * q(3, 3) + q(1, 1) * q(4, 2) + q(2, 3) * q(3, 3) + q(2, 3) * q(4, 2) +
                         q(3, 2) * q(4, 2),
                     "e_2");
        mm.expect_eq(loop_e(net, 3, 1),
                     q(1, 1) * q(2, 1) * q(3, 1) + q(1, 1) * q(2, 1) * q(4, 3) + q(1, 1) * q(3, 3) * q(4, 3) +
                         q(2, 3) * q(3, 3) * q(4, 3),
                     "e_3");
        mm.expect_eq(loop_e(net, 4, 1), q(1, 1) * q(2, 1) * q(3, 1) * q(4, 1), "e_4");
        return mm.result();
    }));

    auto printedD = [](const CylNetwork& net) {
        auto q = [&](int j, int i) { return qgen(net, j, i); };
        return q(1, 1) * q(2, 1) * (q(1, 3) + q(2, 2)) + q(1, 1) * q(3, 3) * (q(1, 3) + q(2, 2) + q(3, 1)) +
               q(2, 3) * q(3, 3) * (q(2, 2) + q(3, 1));
    };

    out.push_back(exact_check(S + "loop-schur-21-n3", "loop Schur function s_(2,1)", {{"n", 3}, {"m", 3}, {"r", 1}}, [] {
        Mismatches mm;
        auto net = CylNetwork::make(3, 3);
        auto q = [&](int j, int i) { return qgen(net, j, i); };
        auto shape = SkewShape::from_partitions({2, 1});
        NCLaurent printed = q(1, 1) * q(2, 1) * (q(1, 3) + q(2, 2) + q(3, 1)) +
                            q(1, 1) * q(3, 3) * (q(1, 3) + q(2, 2) + q(3, 1)) + q(2, 3) * q(3, 3) * (q(2, 2) + q(3, 1));
        mm.expect_eq(semistandard_tableaux(shape, 3).size(), std::size_t{8}, "tableau count");
        mm.expect_eq(loop_schur(net, shape, 1), printed, "tableau sum");
        mm.expect_eq(cover_measurement(net, shape, 1), printed, "path families");
        return mm.result();
    }));

    out.push_back(exact_check(S + "cylindric-schur-D-n3", "cylindric loop Schur function s_D", {{"n", 3}, {"m", 3}, {"s", 1}, {"r", 1}},
                              [printedD] {
                                  Mismatches mm;
                                  auto net = CylNetwork::make(3, 3);
                                  auto D = CylindricShape::from_skew(3, 1, SkewShape::from_partitions({2, 1}));
                                  mm.expect_eq(cylindric_tableaux(D, 3).size(), std::size_t{7}, "tableau count");
                                  mm.expect_eq(cylindric_loop_schur(net, D, 1), printedD(net), "tableau sum");
                                  mm.expect_eq(base_measurement(net, D, 1), printedD(net), "path families");
                                  return mm.result();
                              }));

    out.push_back(exact_check(S + "e-expansion-M43-53", "measurement expanded in loop e's", {{"a", {4, 3}}, {"b", {5, 3}}},
                              [printedD] {
                                  Mismatches mm;
                                  auto net = CylNetwork::make(3, 3);
                                  std::vector<Interval> spec{{4, 5}, {3, 3}};
                                  auto terms = expand_measurement_in_e(3, 3, spec);
                                  mm.expect_eq(e_terms_str(terms), std::string("e(4,5)e(3,3) - eps^-2 e(4,3)e(3,5) - e(4,6)e(3,2)"),
                                               "expansion");
                                  mm.expect_eq(evaluate_e_terms(net, terms), printedD(net), "value of the expansion");
                                  mm.expect_eq(interval_measurement(net, spec, true), printedD(net), "direct measurement");
                                  return mm.result();
                              }));
}

// ---------------------------------------------------------------------------

void r_cluster(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int m = spec.m ? spec.m : 2;
    for (int n : spec.n ? std::vector<int>{spec.n} : std::vector<int>{3, 4, 5}) {
        for (int j = 1; j <= n; ++j) {
            json params{{"n", n}, {"m", m}, {"j", j}};
            const std::string tag = "-n" + std::to_string(n) + "-j" + std::to_string(j);
            out.push_back(exact_check("r-cluster/simple" + tag, "R-sequence realizes the cluster R-matrix", params, [n, m, j] {
                Mismatches mm;
                auto q = build_Q(n, m);
                auto s = XSeed::initial(q);
                auto t = apply_word(s, r_sequence_word(n, 1, j));
                mm.expect(t.matrix() == q, "quiver does not return to itself");
                mm.expect(t.cluster() == closed_R_x(s.vars(), n, 1), "cluster differs from the closed form");
                return mm.result();
            }));
            out.push_back(exact_check("r-cluster/enriched" + tag, "R-sequence realizes the enriched cluster R-matrix", params,
                                      [n, m, j] {
                                          Mismatches mm;
                                          auto q = build_Q_tilde(n, m);
                                          auto s = XSeed::initial(q);
                                          auto t = apply_word(s, r_sequence_word(n, 1, j, &q));
                                          mm.expect(t.matrix() == q, "quiver does not return to itself");
                                          mm.expect(t.cluster() == closed_tilde_R(s.vars(), n, 1),
                                                    "cluster differs from the closed form");
                                          return mm.result();
                                      }));
        }
    }
}

// ---------------------------------------------------------------------------

void braid(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int m = spec.m ? spec.m : 3;
    if (m < 3) throw std::invalid_argument("braid suite needs m >= 3");
    const int points = 20;
    for (int n : spec.n ? std::vector<int>{spec.n} : std::vector<int>{3, 4}) {
        json params{{"n", n}, {"m", m}};
        const std::string tag = "-n" + std::to_string(n);
        auto w = [n](int c) { return r_sequence_word(n, c, 1); };

        out.push_back(exact_check("braid/tropical-braid" + tag, "braid relation on tropical seeds", params, [n, m, w] {
            Mismatches mm;
            auto q = build_Q(n, m);
            auto t0 = YSeedTropical::initial(q);
            for (int c = 1; c + 1 <= m - 1; ++c) {
                auto b1 = apply_word(t0, MutationWord(w(c)).append(w(c + 1)).append(w(c)));
                auto b2 = apply_word(t0, MutationWord(w(c + 1)).append(w(c)).append(w(c + 1)));
                mm.expect(b1 == b2, "braid fails for cycles " + std::to_string(c) + "," + std::to_string(c + 1));
                MutationWord rhs;
                rhs.append(w(c + 1)).append(w(c)).append(w(c + 1));
                MutationWord period = MutationWord(w(c)).append(w(c + 1)).append(w(c)).append(rhs.inverse());
                mm.expect(check_period(q, period, VertexPermutation(), SeedKind::Tropical),
                          "braid word is not a period for cycles " + std::to_string(c) + "," + std::to_string(c + 1));
            }
            return mm.result();
        }));
        out.push_back(exact_check("braid/tropical-involution" + tag, "involution on tropical seeds", params, [n, m, w] {
            Mismatches mm;
            auto t0 = YSeedTropical::initial(build_Q(n, m));
            for (int c = 1; c <= m - 1; ++c) {
                mm.expect(apply_word(t0, MutationWord(w(c)).append(w(c))) == t0, "R_" + std::to_string(c) + " twice is not the identity");
            }
            return mm.result();
        }));
        out.push_back(exact_check("braid/tropical-far" + tag, "far commutation on tropical seeds", params, [n, m, w] {
            Mismatches mm;
            auto t0 = YSeedTropical::initial(build_Q(n, m));
            for (int a = 0; a <= m; ++a) {
                for (int b = a + 2; b <= m; ++b) {
                    mm.expect(apply_word(t0, MutationWord(w(a)).append(w(b))) == apply_word(t0, MutationWord(w(b)).append(w(a))),
                              "R_" + std::to_string(a) + " and R_" + std::to_string(b) + " do not commute");
                }
            }
            return mm.result();
        }));
        out.push_back(exact_check("braid/tropical-closed" + tag, "braid and far commutation of the tropical closed forms",
                                  {{"n", n}, {"m", 4}}, [n] {
                                      Mismatches mm;
                                      // One more column so that two cycles are far apart.
                                      auto q = build_Q(n, 4);
                                      auto T1 = closed_R_y_tropical(q, n, 4, 1), T2 = closed_R_y_tropical(q, n, 4, 2),
                                           T3 = closed_R_y_tropical(q, n, 4, 3);
                                      mm.expect(trop_compose(T1, trop_compose(T2, T1)) == trop_compose(T2, trop_compose(T1, T2)),
                                                "braid fails");
                                      mm.expect(trop_compose(T1, T3) == trop_compose(T3, T1), "far commutation fails");
                                      return mm.result();
                                  }));
        out.push_back(exact_check("braid/x-points" + tag, "cluster R-matrices at random points", params, [n, m, points] {
            Mismatches mm;
            auto v = XSeed::initial(build_Q(n, m)).vars();
            std::vector<std::vector<Fraction>> R;
            for (int c = 1; c <= m - 1; ++c) R.push_back(as_fractions(closed_R_x(v, n, c)));
            std::mt19937_64 rng(point_seed("x" + std::to_string(n)));
            for (int t = 0; t < points; ++t) {
                auto pt = random_point(v->size(), rng);
                for (std::size_t c = 0; c < R.size(); ++c) {
                    mm.expect(push_all({&R[c], &R[c]}, pt) == pt, "involution fails for cycle " + std::to_string(c + 1));
                    if (c + 1 < R.size()) {
                        mm.expect(push_all({&R[c], &R[c + 1], &R[c]}, pt) == push_all({&R[c + 1], &R[c], &R[c + 1]}, pt),
                                  "braid fails for cycles " + std::to_string(c + 1) + "," + std::to_string(c + 2));
                    }
                    for (std::size_t d = c + 2; d < R.size(); ++d) {
                        mm.expect(push_all({&R[c], &R[d]}, pt) == push_all({&R[d], &R[c]}, pt), "far commutation fails");
                    }
                }
            }
            return mm.result();
        }));
        out.push_back(exact_check("braid/y-points" + tag, "y-side cluster R-matrices at random points", params, [n, m, points] {
            Mismatches mm;
            auto v = YSeedUniversal::initial(build_Q(n, m)).vars();
            std::vector<std::vector<Fraction>> R;
            for (int c = 0; c <= m; ++c) R.push_back(closed_R_y_classical(v, n, m, c));
            std::mt19937_64 rng(point_seed("y" + std::to_string(n)));
            for (int t = 0; t < points; ++t) {
                auto pt = random_point(v->size(), rng);
                for (std::size_t c = 0; c < R.size(); ++c) {
                    mm.expect(push_all({&R[c], &R[c]}, pt) == pt, "involution fails for cycle " + std::to_string(c));
                    if (c + 1 < R.size()) {
                        mm.expect(push_all({&R[c], &R[c + 1], &R[c]}, pt) == push_all({&R[c + 1], &R[c], &R[c + 1]}, pt),
                                  "braid fails for cycles " + std::to_string(c) + "," + std::to_string(c + 1));
                    }
                    for (std::size_t d = c + 2; d < R.size(); ++d) {
                        mm.expect(push_all({&R[c], &R[d]}, pt) == push_all({&R[d], &R[c]}, pt),
                                  "far commutation fails for cycles " + std::to_string(c) + "," + std::to_string(d));
                    }
                }
            }
            return mm.result();
        }));
        out.push_back(exact_check("braid/geometric-points" + tag, "geometric R-matrices at random points", params, [n, m, points] {
            Mismatches mm;
            // One more column so that two R-matrices are far apart.
            auto v = snake_vars(n, m + 1);
            std::vector<std::vector<Fraction>> R;
            for (int j = 1; j <= m; ++j) R.push_back(geometric_R_snake(v, n, j));
            std::mt19937_64 rng(point_seed("g" + std::to_string(n)));
            for (int t = 0; t < points; ++t) {
                auto pt = random_point(v->size(), rng);
                for (std::size_t c = 0; c < R.size(); ++c) {
                    mm.expect(push_all({&R[c], &R[c]}, pt) == pt, "involution fails for R_" + std::to_string(c + 1));
                    if (c + 1 < R.size()) {
                        mm.expect(push_all({&R[c], &R[c + 1], &R[c]}, pt) == push_all({&R[c + 1], &R[c], &R[c + 1]}, pt),
                                  "braid fails for R_" + std::to_string(c + 1));
                    }
                    for (std::size_t d = c + 2; d < R.size(); ++d) {
                        mm.expect(push_all({&R[c], &R[d]}, pt) == push_all({&R[d], &R[c]}, pt), "far commutation fails");
                    }
                }
            }
            return mm.result();
        }));
    }
}

// ---------------------------------------------------------------------------

void y_tropical(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int m = spec.m ? spec.m : 3;
    for (int n : spec.n ? std::vector<int>{spec.n} : std::vector<int>{3, 4, 5, 6}) {
        for (int c = 0; c <= m; ++c) {
            out.push_back(exact_check("y-tropical/n" + std::to_string(n) + "-c" + std::to_string(c),
                                      "tropical y-variables after the R-sequence", {{"n", n}, {"m", m}, {"c", c}}, [n, m, c] {
                                          Mismatches mm;
                                          auto q = build_Q(n, m);
                                          auto s = YSeedTropical::initial(q);
                                          auto expect = closed_R_y_tropical(q, n, m, c);
                                          for (int j = 1; j <= n; ++j) {
                                              auto t = apply_word(s, r_sequence_word(n, c, j));
                                              mm.expect(t.matrix() == q, "quiver does not return, j=" + std::to_string(j));
                                              mm.expect(t.values() == expect, "closed form differs, j=" + std::to_string(j));
                                          }
                                          return mm.result();
                                      }));
        }
    }
}

// ---------------------------------------------------------------------------

void qtorus_exact(const SuiteSpec& spec, std::vector<Check>& out)
{
    for (int n : spec.n ? std::vector<int>{spec.n} : std::vector<int>{3, 4}) {
        json params{{"n", n}};
        auto setup = [n] {
            auto c = lambda_pq(n);
            return std::make_tuple(c, pq_indices(*c, n, 'p'), pq_indices(*c, n, 'q'));
        };
        out.push_back(exact_check(nm("qtorus-exact/pq-kappa", n), "p_i q_i kappa_{i+1} = eps^-1 kappa_{i+1} p_i q_i", params, [n, setup] {
            Mismatches mm;
            auto [c, p, q] = setup();
            for (int i = 1; i <= n; ++i) {
                auto pi = NCLaurent::generator(c, p[static_cast<std::size_t>(i - 1)]);
                auto qi = NCLaurent::generator(c, q[static_cast<std::size_t>(i - 1)]);
                auto k = kappa_eps(c, n, wrap(i + 1, n), p, q);
                mm.expect_eq(pi * qi * k, (k * pi * qi).scaled(EpsScalar::eps_pow(-1)), "i=" + std::to_string(i));
            }
            return mm.result();
        }));
        out.push_back(exact_check(nm("qtorus-exact/qp-kappa", n), "q_i p_i kappa_i = eps kappa_i q_i p_i", params, [n, setup] {
            Mismatches mm;
            auto [c, p, q] = setup();
            for (int i = 1; i <= n; ++i) {
                auto pi = NCLaurent::generator(c, p[static_cast<std::size_t>(i - 1)]);
                auto qi = NCLaurent::generator(c, q[static_cast<std::size_t>(i - 1)]);
                auto k = kappa_eps(c, n, i, p, q);
                mm.expect_eq(qi * pi * k, (k * qi * pi).scaled(EpsScalar::eps_pow(1)), "i=" + std::to_string(i));
            }
            return mm.result();
        }));
        out.push_back(exact_check(nm("qtorus-exact/sum-cleared", n), "R preserves p_{i+1} + q_i, kappa cleared", params,
                                  [n, setup] {
                                      Mismatches mm;
                                      auto [c, p, q] = setup();
                                      auto g = [&](const std::vector<int>& v, int i) {
                                          return NCLaurent::generator(c, v[static_cast<std::size_t>(wrap(i, n) - 1)]);
                                      };
                                      auto k = [&](int i) { return kappa_eps(c, n, wrap(i, n), p, q); };
                                      for (int i = 1; i <= n; ++i) {
                                          mm.expect_eq(g(q, i + 1) * k(i + 2) + g(p, i) * k(i), k(i + 1) * (g(p, i + 1) + g(q, i)),
                                                       "i=" + std::to_string(i));
                                      }
                                      return mm.result();
                                  }));
        out.push_back(exact_check(nm("qtorus-exact/kappa-exponents", n), "kappa_{i+1} has one exponent against p_i q_i", params,
                                  [n, setup] {
                                      Mismatches mm;
                                      auto [c, p, q] = setup();
                                      for (int i = 1; i <= n; ++i) {
                                          auto pi = NCLaurent::generator(c, p[static_cast<std::size_t>(i - 1)]);
                                          auto qi = NCLaurent::generator(c, q[static_cast<std::size_t>(i - 1)]);
                                          auto pq = mono_mul(*c, {0, pi.terms().begin()->first}, {0, qi.terms().begin()->first});
                                          auto next = kappa_eps(c, n, wrap(i + 1, n), p, q);
                                          for (auto& t : next.terms()) {
                                              mm.expect_eq(alpha_exponent(*c, pq.e, t.first), -1, "i=" + std::to_string(i));
                                          }
                                      }
                                      return mm.result();
                                  }));
        out.push_back(exact_check(nm("qtorus-exact/lens-cleared", n), "r_{i+1} p_i q_i = q_i p_i r_{i+1}, cleared", params,
                                  [n, setup] {
                                      Mismatches mm;
                                      auto [c, p, q] = setup();
                                      NCLaurent P = pq_loop_product(c, n, p), Qp = pq_loop_product(c, n, q);
                                      for (int a = 0; a < c->size(); ++a) {
                                          NCLaurent g = NCLaurent::generator(c, a);
                                          mm.expect(P * g == g * P && Qp * g == g * Qp, "loop products are not central");
                                      }
                                      for (int i = 1; i <= n; ++i) {
                                          auto pi = NCLaurent::generator(c, p[static_cast<std::size_t>(i - 1)]);
                                          auto qi = NCLaurent::generator(c, q[static_cast<std::size_t>(i - 1)]);
                                          auto k = kappa_eps(c, n, wrap(i + 1, n), p, q);
                                          mm.expect_eq(pi * qi * k, k * qi * pi, "i=" + std::to_string(i));
                                      }
                                      return mm.result();
                                  }));
        out.push_back(exact_check(nm("qtorus-exact/phi-alpha-kappa", n), "phi(alpha_{i+1}(M_j)) against kappa_i", {{"n", n}, {"m", 4}}, [n] {
            Mismatches mm;
            const int m = 4;
            auto s = lambda_snake(n, m);
            auto cy = lambda_y(build_Q(n, m));
            auto phi = [&](int j, int i) {
                return NCLaurent::word(s, {{s->index(snake_name(j, wrap(i, n))), -1}, {s->index(snake_name(j + 1, wrap(i - 1, n))), 1}})
                    .scaled(EpsScalar::eps_pow(-1));
            };
            for (int j = 1; j < m; ++j) {
                for (int i = 1; i <= n; ++i) {
                    for (int j2 = 1; j2 < m; ++j2) {
                        for (int i2 = 1; i2 <= n; ++i2) {
                            int lam = cy->lambda(cy->index("y" + Vertex::grid(j, i).str()), cy->index("y" + Vertex::grid(j2, i2).str()));
                            mm.expect_eq(phi(j, i) * phi(j2, i2), (phi(j2, i2) * phi(j, i)).scaled(EpsScalar::eps_pow(lam)),
                                         "commutation of phi images");
                        }
                    }
                }
                auto qm = snake_column(*s, n, j), qq = snake_column(*s, n, j + 1);
                for (int i = 1; i <= n; ++i) {
                    NCLaurent a = NCLaurent::constant(s, EpsScalar(1));
                    NCLaurent run = NCLaurent::constant(s, EpsScalar(1));
                    for (int k = 1; k <= n - 1; ++k) {
                        run = run * phi(j, i + k);
                        a += run.scaled(EpsScalar::eps_pow(k));
                    }
                    std::vector<std::pair<int, int>> w;
                    for (int k = 1; k <= n - 1; ++k) w.push_back({qm[static_cast<std::size_t>(wrap(i - k, n) - 1)], 1});
                    mm.expect_eq(NCLaurent::word(s, w) * a, kappa_eps(s, n, i, qm, qq),
                                 "j=" + std::to_string(j) + " i=" + std::to_string(i));
                }
            }
            return mm.result();
        }));
    }
}

// ---------------------------------------------------------------------------

void ybr_quantum(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int n = spec.n ? spec.n : 3, m = spec.m ? spec.m : 3;
    json params{{"n", n}, {"m", m}};
    const std::string S = "ybr-quantum/";
    for (int j = 1; j + 1 <= m - 1; ++j) {
        json pj = params;
        pj["j"] = j;
        out.push_back(oracle_check(S + "braid-j" + std::to_string(j), "quantum Yang-Baxter relation", pj, [n, m, j] {
            auto c = lambda_snake(n, m);
            auto R1 = quantum_geometric_R_snake(c, n, j), R2 = quantum_geometric_R_snake(c, n, j + 1);
            return map_identities(compose_skew(R1, compose_skew(R2, R1)), compose_skew(R2, compose_skew(R1, R2)));
        }));
    }
    for (int j = 1; j <= m - 1; ++j) {
        json pj = params;
        pj["j"] = j;
        out.push_back(oracle_check(S + "involution-j" + std::to_string(j), "quantum geometric R is an involution", pj, [n, m, j] {
            auto c = lambda_snake(n, m);
            auto R = quantum_geometric_R_snake(c, n, j);
            return map_identities(compose_skew(R, R), identity_skew(c));
        }));
    }
    out.push_back(oracle_check(S + "pq-transfer-relations", "R preserves p_i q_i and p_{i+1} + q_i", {{"n", n}}, [n] {
        auto c = lambda_pq(n);
        auto R = quantum_geometric_R_pq(c, n);
        auto id = identity_skew(c);
        auto P = pq_indices(*c, n, 'p'), Q = pq_indices(*c, n, 'q');
        SkewPairs pairs;
        for (int i = 0; i < n; ++i) {
            auto p = static_cast<std::size_t>(P[static_cast<std::size_t>(i)]);
            auto q = static_cast<std::size_t>(Q[static_cast<std::size_t>(i)]);
            auto pn = static_cast<std::size_t>(P[static_cast<std::size_t>((i + 1) % n)]);
            pairs.push_back({R[p] * R[q], id[p] * id[q]});
            pairs.push_back({R[pn] + R[q], id[pn] + id[q]});
        }
        return pairs;
    }));
}

void commpres(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int n = spec.n ? spec.n : 3, m = spec.m ? spec.m : 3;
    for (int j = 1; j <= m - 1; ++j) {
        out.push_back(oracle_check("commpres/j" + std::to_string(j), "quantum geometric R preserves commutation",
                                   {{"n", n}, {"m", m}, {"j", j}}, [n, m, j] {
                                       auto c = lambda_snake(n, m);
                                       auto R = quantum_geometric_R_snake(c, n, j);
                                       std::vector<int> gens;
                                       for (int col = std::max(1, j - 1); col <= std::min(m, j + 2); ++col) {
                                           for (int a : snake_column(*c, n, col)) gens.push_back(a);
                                       }
                                       return commutation_identities(*c, R, gens);
                                   }));
    }
}

void q_yrcluster(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int n = spec.n ? spec.n : 3;
    for (int cyc = 0; cyc <= 2; ++cyc) {
        for (int j = 1; j <= n; ++j) {
            out.push_back(oracle_check("q-yrcluster/c" + std::to_string(cyc) + "-j" + std::to_string(j),
                                       "quantum cluster R on y: closed form against mutations",
                                       {{"n", n}, {"m", 2}, {"c", cyc}, {"j", j}}, [n, cyc, j] {
                                           auto q = build_Q(n, 2);
                                           auto c = lambda_y(q);
                                           return map_identities(quantum_cluster_R_y_mutations(q, n, cyc, j),
                                                                 quantum_cluster_R_y(c, n, cyc));
                                       }));
        }
    }
    out.push_back(oracle_check("q-yrcluster/y-braid", "quantum y-side braid relation", {{"n", n}, {"m", 3}}, [n] {
        auto c = lambda_y(build_Q(n, 3));
        auto R1 = quantum_cluster_R_y(c, n, 1), R2 = quantum_cluster_R_y(c, n, 2);
        return map_identities(compose_skew(R1, compose_skew(R2, R1)), compose_skew(R2, compose_skew(R1, R2)));
    }));
    out.push_back(oracle_check("q-yrcluster/y-involution", "quantum y-side involution", {{"n", n}, {"m", 3}}, [n] {
        auto c = lambda_y(build_Q(n, 3));
        auto R1 = quantum_cluster_R_y(c, n, 1);
        return map_identities(compose_skew(R1, R1), identity_skew(c));
    }));
}

void psi_rr(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int n = spec.n ? spec.n : 3, m = spec.m ? spec.m : 3;
    out.push_back(exact_check("psi-rr/phi-homomorphism", "phi respects commutation data", {{"n", n}, {"m", m}}, [n, m] {
        Mismatches mm;
        auto yc = lambda_y_interior(n, m);
        auto qc = lambda_snake(n, m);
        auto phi = phi_eps(yc, qc, n);
        for (int a = 0; a < yc->size(); ++a) {
            for (int b = 0; b < yc->size(); ++b) {
                auto& ta = phi[static_cast<std::size_t>(a)].node().poly.terms();
                auto& tb = phi[static_cast<std::size_t>(b)].node().poly.terms();
                mm.expect_eq(alpha_exponent(*qc, ta.begin()->first, tb.begin()->first), yc->lambda(a, b),
                             yc->name(a) + "," + yc->name(b));
            }
        }
        return mm.result();
    }));
    for (int j = 1; j <= m - 1; ++j) {
        out.push_back(oracle_check("psi-rr/j" + std::to_string(j), "phi intertwines the two R-matrices",
                                   {{"n", n}, {"m", m}, {"j", j}}, [n, m, j] {
                                       auto yc = lambda_y_interior(n, m);
                                       auto qc = lambda_snake(n, m);
                                       auto phi = phi_eps(yc, qc, n);
                                       auto lhs = substitute_all(phi, quantum_geometric_R_snake(qc, n, j));
                                       auto rhs = substitute_all(quantum_cluster_R_y(yc, n, j), phi);
                                       return map_identities(lhs, rhs);
                                   }));
    }
}

void lens_push(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int n = spec.n ? spec.n : 3, m = spec.m ? spec.m : 3;
    out.push_back(oracle_check("lens-push/pq-steps", "each Yang-Baxter move of the lens push", {{"n", n}}, [n] {
        auto c = lambda_pq(n);
        auto p = pq_indices(*c, n, 'p'), q = pq_indices(*c, n, 'q');
        SkewMap R = quantum_geometric_R_pq(c, n);
        SkewPairs steps;
        for (int i = 1; i <= n; ++i) {
            YBTriple t{r_parameter(c, n, i + 1, p, q), SkewExpr::gen(c, p[static_cast<std::size_t>(i - 1)]),
                       SkewExpr::gen(c, q[static_cast<std::size_t>(i - 1)])};
            steps.push_back(yb_precondition(t));
            YBTriple u = yb_move(t);
            steps.push_back({u.p, R[static_cast<std::size_t>(p[static_cast<std::size_t>(i - 1)])]});
            steps.push_back({u.q, R[static_cast<std::size_t>(q[static_cast<std::size_t>(i - 1)])]});
            steps.push_back({u.r, r_parameter(c, n, i, p, q)});
        }
        return steps;
    }));
    out.push_back(oracle_check("lens-push/pq-map", "lens push realizes the quantum geometric R", {{"n", n}}, [n] {
        auto c = lambda_pq(n);
        LensPush push = push_lens_around(c, n, pq_indices(*c, n, 'p'), pq_indices(*c, n, 'q'));
        SkewPairs all = map_identities(push.map, quantum_geometric_R_pq(c, n));
        all.push_back({push.lens.back(), push.lens.front()});
        return all;
    }));
    for (int j = 1; j <= m - 1; ++j) {
        out.push_back(oracle_check("lens-push/snake-j" + std::to_string(j), "lens push on the snake torus",
                                   {{"n", n}, {"m", m}, {"j", j}}, [n, m, j] {
                                       auto c = lambda_snake(n, m);
                                       LensPush push = push_lens_snake(c, n, j);
                                       SkewPairs all = map_identities(push.map, quantum_geometric_R_snake(c, n, j));
                                       all.push_back({push.lens.back(), push.lens.front()});
                                       return all;
                                   }));
    }
}

void loop_invariance(const SuiteSpec& spec, std::vector<Check>& out)
{
    const int n = spec.n ? spec.n : 3, m = spec.m ? spec.m : 3;
    for (int j = 1; j <= m - 1; ++j) {
        out.push_back(oracle_check("loop-invariance/j" + std::to_string(j),
                                   "loop e, s_(2,1) and cylindric s_D are R-invariant", {{"n", n}, {"m", m}, {"j", j}}, [n, m, j] {
                                       auto net = CylNetwork::make(n, m);
                                       std::vector<SkewExpr> es;
                                       auto D = CylindricShape::from_skew(n, 1, SkewShape::from_partitions({2, 1}));
                                       for (int r = 1; r <= n; ++r) {
                                           for (int k = 1; k <= m; ++k) es.push_back(SkewExpr::poly(loop_e(net, k, r)));
                                           es.push_back(SkewExpr::poly(loop_schur(net, SkewShape::from_partitions({2, 1}), r)));
                                           es.push_back(SkewExpr::poly(cylindric_loop_schur(net, D, r)));
                                       }
                                       auto images = substitute_all(es, quantum_geometric_R_snake(net.comm, n, j));
                                       SkewPairs pairs;
                                       for (std::size_t k = 0; k < es.size(); ++k) pairs.push_back({images[k], es[k]});
                                       return pairs;
                                   }));
    }
}

// ---------------------------------------------------------------------------

void structural(const SuiteSpec& spec, std::vector<Check>& out)
{
    for (int n : spec.n ? std::vector<int>{spec.n} : std::vector<int>{3, 4, 5}) {
        json params{{"n", n}, {"m", 2}};
        out.push_back(exact_check(nm("structural/Ai-arrows", n), "quiver after A_i", params, [n] {
            Mismatches mm;
            auto q = build_Q(n, 2);
            mm.expect(structural_oracle_Ai(n, 0) == sorted_arrows(q), "initial quiver");
            for (int i = 1; i <= n - 2; ++i) {
                q = q.mutate(Vertex::grid(1, i));
                mm.expect(structural_oracle_Ai(n, i) == sorted_arrows(q), "A_" + std::to_string(i));
            }
            return mm.result();
        }));
        out.push_back(exact_check(nm("structural/R-AB", n), "B restores the quiver after A", params, [n] {
            Mismatches mm;
            auto q = build_Q(n, 2);
            for (int i = 1; i <= n - 2; ++i) q = q.mutate(Vertex::grid(1, i));
            auto b = q.mutate(Vertex::grid(1, n - 1)).mutate(Vertex::grid(1, n));
            b = b.permuted(VertexPermutation::transposition(Vertex::grid(1, n - 1), Vertex::grid(1, n)));
            mm.expect(b == q, "B(Q') differs from Q'");
            return mm.result();
        }));
        out.push_back(exact_check(nm("structural/half-way", n), "intermediate cluster variables", params, [n] {
            Mismatches mm;
            auto s = XSeed::initial(build_Q(n, 2));
            auto v = s.vars();
            for (int i = 1; i <= n - 2; ++i) {
                s = s.mutate(Vertex::grid(1, i));
                mm.expect_eq(s.x(Vertex::grid(1, i)), intermediate_half(v, n, 1, i), "i=" + std::to_string(i));
            }
            return mm.result();
        }));
        out.push_back(exact_check(nm("structural/S-factor", n), "R(x_i) = S x_i", params, [n] {
            Mismatches mm;
            auto v = XSeed::initial(build_Q(n, 2)).vars();
            auto r = closed_R_x(v, n, 1);
            Fraction S = S_factor(v, n, 1);
            for (int i = 1; i <= n; ++i) {
                auto idx = static_cast<std::size_t>(v->index(xname(Vertex::grid(1, i))));
                mm.expect_eq(Fraction(r[idx]), S * Fraction(poly_var(v, xname(Vertex::grid(1, i)))), "i=" + std::to_string(i));
            }
            return mm.result();
        }));
    }
}

// ---------------------------------------------------------------------------

void properties(const SuiteSpec& spec, std::vector<Check>& out)
{
    const std::string S = "properties/";
    for (int n : spec.n ? std::vector<int>{spec.n} : std::vector<int>{3, 4, 5}) {
        out.push_back(exact_check(nm(S + "positivity", n), "Laurent positivity of cluster variables", {{"n", n}, {"m", 2}}, [n] {
            Mismatches mm;
            for (bool enriched : {false, true}) {
                auto q = enriched ? build_Q_tilde(n, 2) : build_Q(n, 2);
                for (int j = 1; j <= n; ++j) {
                    auto s = XSeed::initial(q);
                    const MutationWord word = r_sequence_word(n, 1, j, enriched ? &q : nullptr);
                    for (auto& st : word.steps()) {
                        if (st.kind == Step::Kind::Swap) {
                            s = s.permute(VertexPermutation::transposition(st.a, st.b));
                            continue;
                        }
                        s = s.mutate(st.a);
                        mm.expect(s.x(st.a).all_coefficients_nonnegative(),
                                  "negative coefficient at " + st.a.str() + ", j=" + std::to_string(j));
                    }
                }
            }
            return mm.result();
        }));
    }
    for (int n : spec.n ? std::vector<int>{spec.n} : std::vector<int>{3, 4}) {
        out.push_back(exact_check(nm(S + "pi-homomorphism", n), "principal parts commute with mutation", {{"n", n}, {"m", 2}}, [n] {
            Mismatches mm;
            auto q = build_Q(n, 2);
            for (int c = 0; c <= 2; ++c) {
                for (int j = 1; j <= n; ++j) {
                    mm.expect(check_pi_compatibility(q, r_sequence_word(n, c, j)),
                              "c=" + std::to_string(c) + " j=" + std::to_string(j));
                }
            }
            return mm.result();
        }));
        out.push_back(exact_check(nm(S + "period-equivalence", n), "universal and tropical periods agree", {{"n", n}, {"m", 3}}, [n] {
            Mismatches mm;
            auto q = build_Q(n, 3);
            auto w = [n](int c) { return r_sequence_word(n, c, 1); };
            // The universal side of the braid word is out of reach (minutes per word); the
            // braid period is checked tropically in the braid suite.
            std::vector<std::pair<std::string, MutationWord>> words;
            for (int c = 0; c <= 3; ++c) words.push_back({"R_" + std::to_string(c) + " twice", MutationWord(w(c)).append(w(c))});
            words.push_back({"R_1 R_3 R_1 R_3", MutationWord(w(1)).append(w(3)).append(w(1)).append(w(3))});
            words.push_back({"R_1", w(1)});
            words.push_back({"R_1 R_2", MutationWord(w(1)).append(w(2))});
            MutationWord one;
            one.mu(Vertex::grid(1, 1));
            words.push_back({"one mutation", one});
            for (auto& [name, word] : words) {
                bool t = check_period(q, word, VertexPermutation(), SeedKind::Tropical);
                bool u = check_period(q, word, VertexPermutation(), SeedKind::Universal);
                mm.expect(t == u, name + ": tropical " + std::to_string(t) + " universal " + std::to_string(u));
            }
            return mm.result();
        }));
    }

    out.push_back(exact_check(S + "skew-duality", "loop Schur functions as path families on the cover",
                              {{"n", 3}, {"m", 3}, {"max_cells", 6}}, [] {
                                  Mismatches mm;
                                  auto net = CylNetwork::make(3, 3);
                                  auto shapes = small_skew_shapes(6);
                                  mm.expect(shapes.size() > 100, "too few shapes enumerated");
                                  for (auto& sh : shapes) {
                                      for (int r = 1; r <= 3; ++r) {
                                          mm.expect(loop_schur(net, sh, r) == cover_measurement(net, sh, r),
                                                    "shape " + sh.str() + " r=" + std::to_string(r));
                                      }
                                  }
                                  return mm.result();
                              }));

    out.push_back(exact_check(S + "cylindric-duality", "cylindric loop Schur functions as path families on the base",
                              {{"n", 3}, {"m", 3}, {"max_cells", 6}}, [] {
                                  Mismatches mm;
                                  auto net = CylNetwork::make(3, 3);
                                  int count = 0;
                                  for (int s = 1; s <= 2; ++s) {
                                      const int w = 3 - s;
                                      std::vector<ColumnRange> cols(static_cast<std::size_t>(w));
                                      std::function<void(int)> rec = [&](int k) {
                                          if (k == w) {
                                              std::optional<CylindricShape> D;
                                              try {
                                                  D.emplace(3, s, cols);
                                              } catch (const std::invalid_argument&) {
                                                  return;
                                              }
                                              if (D->size() > 6) return;
                                              ++count;
                                              for (int r = 1; r <= 3; ++r) {
                                                  mm.expect(cylindric_loop_schur(net, *D, r) == base_measurement(net, *D, r),
                                                            "shape " + D->str() + " r=" + std::to_string(r));
                                              }
                                              return;
                                          }
                                          for (int top = -2; top <= 3; ++top) {
                                              for (int bot = top - 1; bot <= std::min(3, top + 2); ++bot) {
                                                  cols[static_cast<std::size_t>(k)] = {k + 1, top, bot};
                                                  rec(k + 1);
                                              }
                                          }
                                      };
                                      rec(0);
                                  }
                                  mm.expect(count > 20, "too few shapes enumerated");
                                  return mm.result();
                              }));

    out.push_back(exact_check(S + "e-expansion-two-path", "measurement expanded in loop e's, two paths",
                              {{"n", 3}, {"m", 3}, {"max_paths", 2}, {"max_cells", 6}}, [] {
                                  auto net = CylNetwork::make(3, 3);
                                  std::vector<std::string> bad;
                                  auto specs = cylindric_specs(3, 3, 2, 6);
                                  for (auto& sp : specs) {
                                      auto terms = expand_measurement_in_e(3, 3, sp);
                                      if (evaluate_e_terms(net, terms) != interval_measurement(net, sp, true)) {
                                          bad.push_back(specs_str(sp) + ": " + e_terms_str(terms));
                                      }
                                  }
                                  if (bad.empty()) return Mismatch();
                                  std::string msg = std::to_string(bad.size()) + " of " + std::to_string(specs.size()) +
                                                    " specs differ from the direct measurement, first " + bad.front();
                                  return Mismatch(msg);
                              }));

    out.push_back(oracle_check(S + "noncommuting-control", "adjacent quantum R-matrices do not commute",
                               {{"n", 3}, {"m", 3}}, [] {
                                   auto c = lambda_snake(3, 3);
                                   auto R1 = quantum_geometric_R_snake(c, 3, 1), R2 = quantum_geometric_R_snake(c, 3, 2);
                                   return map_identities(compose_skew(R1, R2), compose_skew(R2, R1));
                               },
                               false));
    out.push_back(oracle_check(S + "yb-free-triple", "Yang-Baxter move: five relations and involutivity",
                               {{"lambda", {1, 1, -2}}}, [] {
                                   auto c = std::make_shared<const CommutationMatrix>(
                                       std::vector<std::string>{"p", "q", "r"}, std::vector<int>{0, 1, 1, -1, 0, -2, -1, 2, 0});
                                   YBTriple t{SkewExpr::gen(c, "p"), SkewExpr::gen(c, "q"), SkewExpr::gen(c, "r")};
                                   YBTriple u = yb_move(t);
                                   YBTriple w = yb_move(u);
                                   SkewPairs pairs = yb_relations(t, u);
                                   pairs.push_back(yb_precondition(u));
                                   pairs.push_back({w.p, t.p});
                                   pairs.push_back({w.q, t.q});
                                   pairs.push_back({w.r, t.r});
                                   return pairs;
                               }));
    out.push_back(oracle_check(S + "yb-lens-triples", "Yang-Baxter move on the lens triples", {{"n", 3}}, [] {
        const int n = 3;
        auto c = lambda_pq(n);
        auto p = pq_indices(*c, n, 'p'), q = pq_indices(*c, n, 'q');
        SkewPairs pairs;
        for (int i = 1; i <= n; ++i) {
            YBTriple t{r_parameter(c, n, i + 1, p, q), SkewExpr::gen(c, p[static_cast<std::size_t>(i - 1)]),
                       SkewExpr::gen(c, q[static_cast<std::size_t>(i - 1)])};
            YBTriple u = yb_move(t);
            YBTriple w = yb_move(u);
            for (auto& pr : yb_relations(t, u)) pairs.push_back(pr);
            pairs.push_back({w.p, t.p});
            pairs.push_back({w.q, t.q});
            pairs.push_back({w.r, t.r});
        }
        return pairs;
    }));
}

void false_identity(std::vector<Check>& out)
{
    out.push_back(oracle_check("false-identity/p1q1-commute", "deliberately false identity", {{"n", 3}}, [] {
        auto c = lambda_pq(3);
        auto p = SkewExpr::gen(c, "p1"), q = SkewExpr::gen(c, "q1");
        return SkewPairs{{p * q, q * p}};
    }));
    out.push_back(exact_check("false-identity/exact", "deliberately false identity", {{"n", 3}}, [] {
        auto c = lambda_pq(3);
        auto p = NCLaurent::generator(c, "p1"), q = NCLaurent::generator(c, "q1");
        Mismatches mm;
        mm.expect_eq(p * q, q * p, "p1 q1 = q1 p1");
        return mm.result();
    }));
}

struct SuiteInfo {
    const char* name;
    const char* description;
};

const std::vector<SuiteInfo>& suites()
{
    static const std::vector<SuiteInfo> s{
        {"paper-examples", "printed closed forms and examples, exact"},
        {"r-cluster", "R-sequences realize the cluster R-matrices, exact"},
        {"braid", "braid, involution and far commutation: tropical exact and at random points"},
        {"y-tropical", "tropical y-variables after the R-sequence, exact"},
        {"qtorus-exact", "quantum torus identities, exact"},
        {"ybr-quantum", "quantum Yang-Baxter relation and involutivity, oracle"},
        {"commpres", "commutation preservation, oracle"},
        {"q-yrcluster", "quantum cluster R on y against the mutation route, oracle"},
        {"psi-rr", "phi intertwines the geometric and cluster R-matrices, oracle"},
        {"lens-push", "lens push realizes the quantum geometric R, oracle"},
        {"loop-invariance", "R-invariance of loop symmetric functions, oracle"},
        {"structural", "quiver lemmas, intermediate clusters and S, exact"},
        {"properties", "positivity, periods, network dualities, Yang-Baxter move"},
        {"false-identity", "deliberately false identities for exercising witnesses"},
        {"empty", "no checks"},
    };
    return s;
}

}  // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> r;
    for (auto& s : suites()) r.push_back(s.name);
    return r;
}

std::string suite_description(const std::string& name)
{
    for (auto& s : suites()) {
        if (name == s.name) return s.description;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Check> build_suite(const SuiteSpec& spec)
{
    suite_description(spec.suite);
    if (spec.n != 0 && spec.n < 3) throw std::invalid_argument("n must be at least 3");
    if (spec.m < 0) throw std::invalid_argument("m must be positive");
    if (!spec.allow_large && (spec.n > 6 || spec.m > 4)) {
        throw std::invalid_argument("n <= 6 and m <= 4 unless large parameters are allowed");
    }
    std::vector<Check> out;
    const std::string& s = spec.suite;
    if (s == "paper-examples") paper_examples(out);
    else if (s == "r-cluster") r_cluster(spec, out);
    else if (s == "braid") braid(spec, out);
    else if (s == "y-tropical") y_tropical(spec, out);
    else if (s == "qtorus-exact") qtorus_exact(spec, out);
    else if (s == "ybr-quantum") ybr_quantum(spec, out);
    else if (s == "commpres") commpres(spec, out);
    else if (s == "q-yrcluster") q_yrcluster(spec, out);
    else if (s == "psi-rr") psi_rr(spec, out);
    else if (s == "lens-push") lens_push(spec, out);
    else if (s == "loop-invariance") loop_invariance(spec, out);
    else if (s == "structural") structural(spec, out);
    else if (s == "properties") properties(spec, out);
    else if (s == "false-identity") false_identity(out);
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return out;
}

}  // namespace clr
