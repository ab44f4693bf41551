#include "cgc/convcode.hpp"

#include "cgc/format.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace cgc {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

std::vector<int> compute_row_degrees(const Matrix<Poly>& m) {
    std::vector<int> nu(m.rows(), Poly::kMinusInfinity);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) nu[i] = std::max(nu[i], m(i, j).degree());
    return nu;
}

// Calls f(cols) for every increasing k-subset of {0..n-1}.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

int hamming_weight(const std::vector<Symbol>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](Symbol s) { return s != 0; }));
}

} // namespace

int PolyEncoder::degree() const noexcept { return std::accumulate(row_degrees.begin(), row_degrees.end(), 0); }

Matrix<RatFn> to_rational(const Matrix<Poly>& m) {
    Matrix<RatFn> out(m.rows(), m.cols(), RatFn::zero(m.zero().field()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RatFn(m(i, j));
    return out;
}

Matrix<Fq> leading_coefficient_matrix(const Matrix<Poly>& m) {
    const FieldSpec& f = m.zero().field();
    const auto nu = compute_row_degrees(m);
    Matrix<Fq> out(m.rows(), m.cols(), f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).coefficient(nu[i]);
    return out;
}

Poly determinant(const Matrix<Poly>& input) {
    if (input.rows() != input.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    const std::size_t k = input.rows();
    const FieldSpec& f = input.zero().field();
    if (k == 0) return Poly(f.one());

    Matrix<Poly> a = input;
    bool negate = false;
    Poly prev(f.one());
    for (std::size_t c = 0; c + 1 < k; ++c) {
        if (a(c, c).is_zero()) {
            std::size_t r = c + 1;
            while (r < k && a(r, c).is_zero()) ++r;
            if (r == k) return Poly(f);
            a.swap_rows(c, r);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < k; ++i)
            for (std::size_t j = c + 1; j < k; ++j)
                a(i, j) = exact_div(a(i, j) * a(c, c) - a(i, c) * a(c, j), prev);
        prev = a(c, c);
    }
    return negate ? -a(k - 1, k - 1) : a(k - 1, k - 1);
}

Poly maximal_minor_gcd(const Matrix<Poly>& m) {
    const FieldSpec& f = m.zero().field();
    Poly g(f);
    for_each_subset(m.cols(), m.rows(), [&](const std::vector<std::size_t>& cols) {
        Matrix<Poly> sub(m.rows(), m.rows(), m.zero());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(i, cols[j]);
        g = gcd(g, determinant(sub));
    });
    return g;
}

PolyEncoder make_encoder(Matrix<Poly> entries) {
    if (entries.rows() == 0 || entries.rows() > entries.cols())
        throw Error(ErrorKind::RankDeficient, "encoder must have 1 <= k <= n rows");
    PolyEncoder out{std::move(entries), {}, false, false};
    const Poly g = maximal_minor_gcd(out.entries);
    if (g.is_zero()) throw Error(ErrorKind::RankDeficient, "rows are dependent over F_q(z)");
    out.row_degrees = compute_row_degrees(out.entries);
    out.is_basic = g.is_one();
    out.is_minimal = rank(leading_coefficient_matrix(out.entries)) == out.k();
    return out;
}

PolyEncoder clear_denominators(const Matrix<RatFn>& g) {
    if (rank(g) != g.rows()) throw Error(ErrorKind::RankDeficient, "generator rows are dependent over F_q(z)");
    const FieldSpec& f = g.zero().field();
    Matrix<Poly> out(g.rows(), g.cols(), Poly(f));
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Poly l(f.one());
        for (std::size_t j = 0; j < g.cols(); ++j) l = lcm(l, g(i, j).den());
        for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = exact_div(g(i, j).num() * l, g(i, j).den());
    }
    return make_encoder(std::move(out));
}

SmithForm smith_form(const Matrix<Poly>& input) {
    const std::size_t k = input.rows();
    const std::size_t n = input.cols();
    const Poly zero = input.zero();
    Matrix<Poly> a = input;
    SmithForm sf{Matrix<Poly>::identity(k, zero), Matrix<Poly>::identity(n, zero), Matrix<Poly>::identity(n, zero),
                 {}};

    // Elementary operations, each mirrored on U, V and V⁻¹.
    const auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        a.swap_rows(r1, r2);
        sf.U.swap_rows(r1, r2);
    };
    const auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        a.swap_cols(c1, c2);
        sf.V.swap_cols(c1, c2);
        sf.V_inverse.swap_rows(c1, c2);
    };
    const auto scale_row = [&](std::size_t r, const Fq& c) {
        for (std::size_t j = 0; j < n; ++j) a(r, j) = a(r, j).scaled(c);
        for (std::size_t j = 0; j < k; ++j) sf.U(r, j) = sf.U(r, j).scaled(c);
    };
    // row_dst += f · row_src
    const auto add_row = [&](std::size_t dst, std::size_t src, const Poly& f) {
        for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
        for (std::size_t j = 0; j < k; ++j) sf.U(dst, j) += f * sf.U(src, j);
    };
    // col_dst += f · col_src; the inverse operation is row_src −= f · row_dst on V⁻¹.
    const auto add_col = [&](std::size_t dst, std::size_t src, const Poly& f) {
        for (std::size_t i = 0; i < k; ++i) a(i, dst) += f * a(i, src);
        for (std::size_t i = 0; i < n; ++i) sf.V(i, dst) += f * sf.V(i, src);
        for (std::size_t j = 0; j < n; ++j) sf.V_inverse(src, j) -= f * sf.V_inverse(dst, j);
    };

    for (std::size_t t = 0; t < std::min(k, n); ++t) {
        while (true) {
            std::size_t pr = k, pc = n;
            int best = kInfinity;
            for (std::size_t i = t; i < k; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!a(i, j).is_zero() && a(i, j).degree() < best) {
                        best = a(i, j).degree();
                        pr = i;
                        pc = j;
                    }
            if (pr == k) return sf; // remaining block is zero

            swap_rows(t, pr);
            swap_cols(t, pc);
            scale_row(t, a(t, t).lead().inverse());

            bool clean = true;
            for (std::size_t i = t + 1; i < k; ++i) {
                if (a(i, t).is_zero()) continue;
                auto [q, r] = divrem(a(i, t), a(t, t));
                add_row(i, t, -q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j).is_zero()) continue;
                auto [q, r] = divrem(a(t, j), a(t, t));
                add_col(j, t, -q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block; otherwise pull the
            // offending row up and keep reducing.
            bool divides = true;
            for (std::size_t i = t + 1; i < k && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divrem(a(i, j), a(t, t)).second.is_zero()) {
                        add_row(t, i, one_like(zero));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        sf.invariant_factors.push_back(a(t, t));
    }
    return sf;
}

BasicExtraction basic_encoder(const PolyEncoder& m) {
    const Poly g = maximal_minor_gcd(m.entries);
    if (g.is_zero()) throw Error(ErrorKind::RankDeficient, "rows are dependent over F_q(z)");

    Poly stripped = g;
    const Poly z = Poly::z(g.field());
    while (stripped.code(0) == 0) stripped = exact_div(stripped, z);
    const bool catastrophic = stripped.degree() > 0;

    if (g.is_one()) return {m, g, false};

    const SmithForm sf = smith_form(m.entries);
    Matrix<Poly> rows(m.k(), m.n(), m.entries.zero());
    for (std::size_t i = 0; i < m.k(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) rows(i, j) = sf.V_inverse(i, j);
    return {make_encoder(std::move(rows)), g, catastrophic};
}

PolyEncoder row_reduce(const PolyEncoder& input) {
    if (input.is_minimal) return input;
    Matrix<Poly> m = input.entries;
    const FieldSpec& f = input.field();
    while (true) {
        const Matrix<Fq> lead = leading_coefficient_matrix(m);
        if (rank(lead) == m.rows()) break;

        const auto nu = compute_row_degrees(m);
        const std::vector<Fq> c = kernel(transpose(lead)).front();
        std::size_t top = m.rows();
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!c[i].is_zero() && (top == m.rows() || nu[i] > nu[top])) top = i;

        const Fq scale = c[top].inverse();
        std::vector<Poly> row(m.cols(), Poly(f));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (c[i].is_zero()) continue;
            const Fq ci = c[i] * scale;
            for (std::size_t j = 0; j < m.cols(); ++j) row[j] += m(i, j).scaled(ci).shifted(nu[top] - nu[i]);
        }
        m.set_row(top, row);
    }
    return make_encoder(std::move(m));
}

StateDiagram::StateDiagram(const PolyEncoder& m, std::uint64_t max_branches)
    : field_(m.field()), k_(m.k()), n_(m.n()), nu_(m.row_degrees), offset_(m.k(), 0) {
    const Symbol q = field_.q();
    for (std::size_t i = 0; i < k_; ++i) {
        offset_[i] = delta_;
        delta_ += nu_[i];
    }
    const auto too_large = [&] {
        throw Error(ErrorKind::SearchSpaceTooLarge, "state diagram with q=" + std::to_string(q) +
                                                        " delta=" + std::to_string(delta_) +
                                                        " k=" + std::to_string(k_) + " is too large");
    };
    for (int i = 0; i < delta_; ++i) {
        num_states_ *= q;
        if (num_states_ > max_branches) too_large();
    }
    for (std::size_t i = 0; i < k_; ++i) {
        num_inputs_ *= q;
        if (num_states_ * num_inputs_ > max_branches) too_large();
    }

    coef_.assign(k_, std::vector<std::vector<Symbol>>(n_));
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (int l = 0; l <= nu_[i]; ++l) coef_[i][j].push_back(m.entries(i, j).code(l));

    next_.resize(num_states_ * num_inputs_);
    weight_.resize(num_states_ * num_inputs_);
    for (std::uint64_t s = 0; s < num_states_; ++s)
        for (std::uint64_t u = 0; u < num_inputs_; ++u) {
            auto [ns, out] = step(s, u);
            next_[s * num_inputs_ + u] = ns;
            weight_[s * num_inputs_ + u] = hamming_weight(out);
        }
}

std::pair<std::uint64_t, std::vector<Symbol>> StateDiagram::step(std::uint64_t state, std::uint64_t input) const {
    const Symbol q = field_.q();
    std::vector<Symbol> reg(delta_), in(k_);
    for (int p = 0; p < delta_; ++p, state /= q) reg[p] = static_cast<Symbol>(state % q);
    for (std::size_t i = 0; i < k_; ++i, input /= q) in[i] = static_cast<Symbol>(input % q);

    std::vector<Symbol> out(n_, 0);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const auto& c = coef_[i][j];
            Symbol acc = field_.mul(in[i], c[0]);
            for (int l = 1; l <= nu_[i]; ++l) acc = field_.add(acc, field_.mul(reg[offset_[i] + l - 1], c[l]));
            out[j] = field_.add(out[j], acc);
        }

    std::vector<Symbol> nreg(delta_);
    for (std::size_t i = 0; i < k_; ++i) {
        if (nu_[i] == 0) continue;
        nreg[offset_[i]] = in[i];
        for (int l = 1; l < nu_[i]; ++l) nreg[offset_[i] + l] = reg[offset_[i] + l - 1];
    }
    std::uint64_t ns = 0;
    for (int p = delta_ - 1; p >= 0; --p) ns = ns * q + nreg[p];
    return {ns, std::move(out)};
}

int free_distance(const PolyEncoder& m) {
    if (!m.is_basic || !m.is_minimal)
        throw Error(ErrorKind::CatastrophicEncoder, "free distance needs a minimal basic encoder");
    const StateDiagram sd(m);
    const std::uint64_t S = sd.num_states();
    const std::uint64_t I = sd.num_inputs();

    // A zero-weight cycle avoiding the zero state means finite output for an
    // infinite input.
    {
        std::vector<int> color(S, 0);
        for (std::uint64_t root = 1; root < S; ++root) {
            if (color[root]) continue;
            std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{root, 0}};
            color[root] = 1;
            while (!stack.empty()) {
                auto& [s, u] = stack.back();
                if (u == I) {
                    color[s] = 2;
                    stack.pop_back();
                    continue;
                }
                const std::uint64_t input = u++;
                if (sd.weight(s, input) != 0) continue;
                const std::uint64_t t = sd.next(s, input);
                if (t == 0) continue;
                if (color[t] == 1) throw Error(ErrorKind::CatastrophicEncoder, "zero-weight cycle in state diagram");
                if (color[t] == 0) {
                    color[t] = 1;
                    stack.emplace_back(t, 0);
                }
            }
        }
    }

    int best = kInfinity;
    std::vector<int> dist(S, kInfinity);
    using Item = std::pair<int, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::uint64_t u = 1; u < I; ++u) {
        const std::uint64_t t = sd.next(0, u);
        const int w = sd.weight(0, u);
        if (t == 0) {
            best = std::min(best, w);
        } else if (w < dist[t]) {
            dist[t] = w;
            pq.emplace(w, t);
        }
    }
    while (!pq.empty()) {
        const auto [d, s] = pq.top();
        pq.pop();
        if (d > dist[s]) continue;
        if (d >= best) break;
        for (std::uint64_t u = 0; u < I; ++u) {
            const std::uint64_t t = sd.next(s, u);
            const int nd = d + sd.weight(s, u);
            if (t == 0) {
                best = std::min(best, nd);
            } else if (nd < dist[t]) {
                dist[t] = nd;
                pq.emplace(nd, t);
            }
        }
    }
    if (best == kInfinity) throw Error(ErrorKind::CatastrophicEncoder, "no path returns to the zero state");
    return best;
}

int free_distance_oracle(const PolyEncoder& m, int deg_bound, std::uint64_t node_budget) {
    const FieldSpec& f = m.field();
    const std::size_t k = m.k(), n = m.n();
    const Symbol q = f.q();
    int mu = 0;
    for (int nu : m.row_degrees) mu = std::max(mu, nu);

    std::uint64_t inputs = 1;
    for (std::size_t i = 0; i < k; ++i) {
        inputs *= q;
        if (inputs > (1u << 16)) throw Error(ErrorKind::SearchSpaceTooLarge, "q^k exceeds 65536");
    }

    // contrib[u][l][j]: coefficient of z^l in column j of u·M for constant input u.
    std::vector<std::vector<std::vector<Symbol>>> contrib(
        inputs, std::vector<std::vector<Symbol>>(mu + 1, std::vector<Symbol>(n, 0)));
    for (std::uint64_t u = 0; u < inputs; ++u) {
        std::uint64_t v = u;
        for (std::size_t i = 0; i < k; ++i, v /= q) {
            const Symbol ui = static_cast<Symbol>(v % q);
            if (ui == 0) continue;
            for (int l = 0; l <= mu; ++l)
                for (std::size_t j = 0; j < n; ++j)
                    contrib[u][l][j] = f.add(contrib[u][l][j], f.mul(ui, m.entries(i, j).code(l)));
        }
    }

    const int horizon = deg_bound + mu + 1;
    std::vector<std::vector<Symbol>> acc(horizon, std::vector<Symbol>(n, 0));
    int best = kInfinity;
    std::uint64_t nodes = 0;

    const auto apply = [&](int t, std::uint64_t u, bool add) {
        for (int l = 0; l <= mu; ++l)
            for (std::size_t j = 0; j < n; ++j)
                acc[t + l][j] = add ? f.add(acc[t + l][j], contrib[u][l][j]) : f.sub(acc[t + l][j], contrib[u][l][j]);
    };

    std::function<void(int, int)> search = [&](int t, int weight) {
        if (t > deg_bound) {
            for (int s = deg_bound + 1; s < horizon; ++s) weight += hamming_weight(acc[s]);
            best = std::min(best, weight);
            return;
        }
        // Inputs with u_0 = 0 are time shifts of shorter inputs.
        for (std::uint64_t u = (t == 0 ? 1 : 0); u < inputs; ++u) {
            if (++nodes > node_budget)
                throw Error(ErrorKind::SearchSpaceTooLarge, "oracle node budget exhausted");
            apply(t, u, true);
            const int w = weight + hamming_weight(acc[t]);
            if (w < best) search(t + 1, w);
            apply(t, u, false);
        }
    };
    search(0, 0);
    return best;
}

int singleton_bound(int n, int k, int delta) { return (n - k) * (delta / k + 1) + delta + 1; }

bool is_mds(const CodeReport& r) { return r.d_free == r.singleton_bound; }

bool check_dual(const Matrix<RatFn>& g, const Matrix<RatFn>& h) {
    if (g.cols() != h.cols())
        throw Error(ErrorKind::ShapeMismatch, "generator has length " + std::to_string(g.cols()) +
                                                  ", dual has length " + std::to_string(h.cols()));
    return is_zero_matrix(h * transpose(g));
}

Analysis analyze(const Matrix<RatFn>& g) {
    PolyEncoder cleared = clear_denominators(g);
    BasicExtraction basic = basic_encoder(cleared);
    PolyEncoder minimal = row_reduce(basic.encoder);

    CodeReport r;
    r.n = static_cast<int>(minimal.n());
    r.k = static_cast<int>(minimal.k());
    r.delta = minimal.degree();
    r.d_free = free_distance(minimal);
    r.singleton_bound = singleton_bound(r.n, r.k, r.delta);
    r.is_mds = is_mds(r);
    r.input_was_catastrophic = basic.input_was_catastrophic;
    return {std::move(cleared), std::move(minimal), basic.input_minor_gcd, r};
}

} // namespace cgc
