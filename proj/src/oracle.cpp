#include "chaincode/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace chaincode {

namespace {

using Row = Submodule::Row;

struct VecHash {
    std::size_t operator()(const std::vector<RingElem>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x.code) * 1099511628211ull;
        return h;
    }
};

int val(std::uint64_t x, int p, int a) {
    if (x == 0) return a;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::uint64_t inv_mod(std::uint64_t u, std::uint64_t m) {
    long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(u % m);
    while (nr != 0) {
        long long q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw DomainError("not a unit modulo p^a");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

std::uint64_t ipow(std::uint64_t b, int k) {
    std::uint64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
}

bool zero_row(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](std::uint64_t x) { return x == 0; });
}

// row_i -= q * row_k (mod m)
void axpy(Row& dst, const Row& src, std::uint64_t q, std::uint64_t m) {
    if (q == 0) return;
    const std::uint64_t nq = (m - q % m) % m;
    for (std::size_t c = 0; c < dst.size(); ++c) dst[c] = (dst[c] + nq * src[c]) % m;
}

// Howell form over Z/p^a; zero rows dropped.
std::vector<Row> howell(std::vector<Row> rows, int p, int a) {
    const std::uint64_t m = ipow(p, a);
    rows.erase(std::remove_if(rows.begin(), rows.end(), zero_row), rows.end());
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivcol;
    std::vector<int> pivval;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t best = rows.size();
        int bv = a;
        for (std::size_t i = r; i < rows.size(); ++i) {
            int v = val(rows[i][col], p, a);
            if (v < bv) {
                bv = v;
                best = i;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        const std::uint64_t pv = ipow(p, bv);
        const std::uint64_t u = inv_mod(rows[r][col] / pv, m);
        for (auto& x : rows[r]) x = x * u % m;
        for (std::size_t i = r + 1; i < rows.size(); ++i) axpy(rows[i], rows[r], rows[i][col] / pv, m);
        Row extra(rows[r]);
        const std::uint64_t ann = ipow(p, a - bv);
        for (auto& x : extra) x = x * ann % m;
        if (!zero_row(extra)) rows.push_back(std::move(extra));
        pivcol.push_back(col);
        pivval.push_back(bv);
        ++r;
    }
    rows.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
        const std::uint64_t pv = ipow(p, pivval[k]);
        for (std::size_t i = 0; i < k; ++i) axpy(rows[i], rows[k], rows[i][pivcol[k]] / pv, m);
    }
    return rows;
}

std::size_t pivot_of(const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c)
        if (r[c]) return c;
    return r.size();
}

// Rows spanning {u : sum_k u_k * image_k = 0}, where image_k is the image of the k-th input basis vector.
std::vector<Row> kernel(const std::vector<Row>& images, int p, int a) {
    const std::size_t n = images.size();
    if (n == 0) return {};
    const std::size_t K = images[0].size();
    std::vector<Row> B;
    for (std::size_t k = 0; k < n; ++k) {
        Row r(images[k]);
        r.resize(K + n, 0);
        r[K + k] = 1;
        B.push_back(std::move(r));
    }
    std::vector<Row> out;
    for (auto& r : howell(std::move(B), p, a))
        if (pivot_of(r) >= K) out.emplace_back(r.begin() + K, r.end());
    return out;
}

std::vector<RingElem> coord_basis(const RingPtr& R) {
    std::vector<RingElem> b;
    for (int c = 0; c < R->coord_count(); ++c) {
        std::vector<std::uint32_t> v(R->coord_count(), 0);
        v[c] = 1;
        b.push_back(R->from_coords(v));
    }
    return b;
}

nlohmann::json big(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

nlohmann::json dist_json(const WeightDist& w) {
    auto j = nlohmann::json::array();
    for (const auto& x : w) j.push_back(big(x));
    return j;
}

Poly xn_minus(const RingPtr& r, int n, RingElem c) { return Poly::monomial(r, r->one(), n) - Poly::constant(r, c); }

}  // namespace

bool CodewordSet::contains(const std::vector<RingElem>& w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

CodewordSet enumerate_ideal(const std::vector<Poly>& gens, int N, RingElem lambda, std::size_t cap) {
    if (gens.empty()) throw DomainError("no generators");
    const RingPtr R = gens[0].ring();
    std::vector<std::vector<RingElem>> span;
    {
        std::unordered_set<std::vector<RingElem>, VecHash> seen;
        for (const auto& g : gens)
            for (RingElem t : R->teichmuller_set()) {
                if (t.code == 0) continue;
                for (int b = 0; b < R->e(); ++b)
                    for (int i = 0; i < N; ++i) {
                        Poly v = mod_reduce(shift(scale(g, R->mul(t, R->pow(R->gamma(), b))), i), N, lambda);
                        if (v.is_zero()) continue;
                        std::vector<RingElem> w(N);
                        for (int k = 0; k < N; ++k) w[k] = v.coeff(k);
                        if (seen.insert(w).second) span.push_back(w);
                    }
            }
    }
    std::unordered_set<std::vector<RingElem>, VecHash> set;
    std::deque<std::vector<RingElem>> work;
    std::vector<RingElem> zero(N);
    set.insert(zero);
    work.push_back(zero);
    while (!work.empty()) {
        auto w = std::move(work.front());
        work.pop_front();
        for (const auto& s : span) {
            std::vector<RingElem> u(N);
            for (int k = 0; k < N; ++k) u[k] = R->add(w[k], s[k]);
            if (set.insert(u).second) {
                if (set.size() > cap) throw CapExceeded("ideal enumeration exceeds the cap", set.size());
                work.push_back(std::move(u));
            }
        }
    }
    CodewordSet out{R, N, {set.begin(), set.end()}};
    std::sort(out.words.begin(), out.words.end());
    return out;
}

int min_hamming(const CodewordSet& c) {
    int best = 0;
    for (const auto& w : c.words) {
        int h = static_cast<int>(std::count_if(w.begin(), w.end(), [](RingElem x) { return x.code != 0; }));
        if (h > 0 && (best == 0 || h < best)) best = h;
    }
    return best;
}

int min_rt(const CodewordSet& c) {
    auto h = rt_histogram(c);
    for (std::size_t r = 1; r < h.size(); ++r)
        if (h[r] != 0) return static_cast<int>(r);
    return 0;
}

WeightDist rt_histogram(const CodewordSet& c) {
    WeightDist h(c.N + 1, 0);
    for (const auto& w : c.words) {
        int r = 0;
        for (int k = c.N - 1; k >= 0; --k)
            if (w[k].code) {
                r = k + 1;
                break;
            }
        h[r] += 1;
    }
    return h;
}

WeightDist hamming_histogram(const CodewordSet& c) {
    WeightDist h(c.N + 1, 0);
    for (const auto& w : c.words) h[std::count_if(w.begin(), w.end(), [](RingElem x) { return x.code != 0; })] += 1;
    return h;
}

CodewordSet dual_by_scan(const CodewordSet& c, std::size_t cap) {
    const RingPtr& R = c.ring;
    const std::uint64_t q = R->size();
    double total = 1;
    for (int i = 0; i < c.N; ++i) total *= static_cast<double>(q);
    if (total > static_cast<double>(cap)) throw CapExceeded("ambient scan exceeds the cap", 0);
    CodewordSet out{R, c.N, {}};
    std::vector<RingElem> u(c.N);
    for (;;) {
        bool ok = true;
        for (const auto& w : c.words) {
            RingElem s{};
            for (int k = 0; k < c.N; ++k) s = R->add(s, R->mul(u[k], w[k]));
            if (s.code) {
                ok = false;
                break;
            }
        }
        if (ok) out.words.push_back(u);
        int k = 0;
        for (; k < c.N; ++k) {
            if (++u[k].code < q) break;
            u[k].code = 0;
        }
        if (k == c.N) break;
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

Submodule::Submodule(RingPtr ring, Poly modulus) : ring_(std::move(ring)), modulus_(std::move(modulus)) {
    if (!modulus_.is_monic()) throw DomainError("ambient modulus must be monic");
    D_ = modulus_.degree();
    L_ = ring_->coord_count();
    a_ = ring_->coord_exponent();
    pa_ = ring_->coord_modulus();
}

std::vector<std::uint64_t> Submodule::to_vec(const Poly& f) const {
    Poly g = f % modulus_;
    Row v(static_cast<std::size_t>(D_) * L_, 0);
    for (int i = 0; i < D_; ++i) {
        auto co = ring_->coords(g.coeff(i));
        for (int c = 0; c < L_; ++c) v[(D_ - 1 - i) * L_ + c] = co[c];
    }
    return v;
}

Poly Submodule::to_poly(const Row& v) const {
    std::vector<RingElem> co(D_);
    for (int i = 0; i < D_; ++i) {
        std::vector<std::uint32_t> x(L_);
        for (int c = 0; c < L_; ++c) x[c] = static_cast<std::uint32_t>(v[(D_ - 1 - i) * L_ + c]);
        co[i] = ring_->from_coords(x);
    }
    return Poly(ring_, co);
}

void Submodule::add_rows(std::vector<Row> extra) {
    extra.insert(extra.end(), rows_.begin(), rows_.end());
    rows_ = howell(std::move(extra), ring_->p(), a_);
}

Submodule Submodule::ideal(const RingPtr& ring, const Poly& modulus, const std::vector<Poly>& gens) {
    Submodule s(ring, modulus);
    for (const auto& g : gens) s = s.plus_ideal(g);
    return s;
}

Submodule Submodule::whole(const RingPtr& ring, const Poly& modulus) {
    return ideal(ring, modulus, {Poly::constant(ring, ring->one())});
}

Submodule Submodule::plus_ideal(const Poly& g) const {
    std::vector<Row> extra;
    auto basis = coord_basis(ring_);
    Poly xi = g % modulus_;
    for (int i = 0; i < D_; ++i) {
        for (RingElem b : basis) extra.push_back(to_vec(scale(xi, b)));
        xi = shift(xi, 1) % modulus_;
    }
    Submodule out(*this);
    out.add_rows(std::move(extra));
    return out;
}

Submodule Submodule::plus(const Submodule& o) const {
    Submodule out(*this);
    out.add_rows(o.rows_);
    return out;
}

Submodule Submodule::intersect(const Submodule& o) const {
    // Zassenhaus: rows [a | a] and [b | 0]
    const std::size_t W = static_cast<std::size_t>(D_) * L_;
    std::vector<Row> M;
    for (const auto& r : rows_) {
        Row x(r);
        x.insert(x.end(), r.begin(), r.end());
        M.push_back(std::move(x));
    }
    for (const auto& r : o.rows_) {
        Row x(r);
        x.resize(2 * W, 0);
        M.push_back(std::move(x));
    }
    Submodule out(ring_, modulus_);
    std::vector<Row> keep;
    for (auto& r : howell(std::move(M), ring_->p(), a_))
        if (pivot_of(r) >= W) keep.emplace_back(r.begin() + W, r.end());
    out.add_rows(std::move(keep));
    return out;
}

mpz_class Submodule::size() const {
    mpz_class s = 1;
    for (const auto& r : rows_) {
        int v = val(r[pivot_of(r)], ring_->p(), a_);
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), ring_->p(), a_ - v);
        s *= f;
    }
    return s;
}

bool Submodule::contains(const Poly& f) const {
    Row v = to_vec(f);
    const int p = ring_->p();
    for (const auto& r : rows_) {
        std::size_t c = pivot_of(r);
        std::uint64_t pv = r[c];
        if (v[c] % pv != 0) return false;
        axpy(v, r, v[c] / pv, pa_);
    }
    (void)p;
    return zero_row(v);
}

bool Submodule::is_ideal() const {
    auto basis = coord_basis(ring_);
    for (const auto& r : rows_) {
        Poly f = to_poly(r);
        if (!contains(shift(f, 1))) return false;
        for (RingElem b : basis)
            if (!contains(scale(f, b))) return false;
    }
    return true;
}

std::vector<Poly> Submodule::basis() const {
    std::vector<Poly> out;
    for (const auto& r : rows_) out.push_back(to_poly(r));
    return out;
}

WeightDist Submodule::rt_histogram() const {
    // count[k] = #elements of degree < k
    std::vector<mpz_class> count(D_ + 1, 1);
    for (int k = 0; k <= D_; ++k) {
        const std::size_t first = static_cast<std::size_t>(D_ - k) * L_;
        for (const auto& r : rows_) {
            std::size_t c = pivot_of(r);
            if (c < first) continue;
            mpz_class f;
            mpz_ui_pow_ui(f.get_mpz_t(), ring_->p(), a_ - val(r[c], ring_->p(), a_));
            count[k] *= f;
        }
    }
    WeightDist h(D_ + 1, 0);
    h[0] = 1;
    for (int k = 1; k <= D_; ++k) h[k] = count[k] - count[k - 1];
    return h;
}

int Submodule::min_rt() const {
    auto h = rt_histogram();
    for (std::size_t r = 1; r < h.size(); ++r)
        if (h[r] != 0) return static_cast<int>(r);
    return 0;
}

CodewordSet Submodule::elements(std::size_t cap) const {
    mpz_class sz = size();
    if (sz > cap) throw CapExceeded("codeword enumeration exceeds the cap", cap);
    std::vector<std::uint64_t> radix;
    for (const auto& r : rows_) radix.push_back(ipow(ring_->p(), a_ - val(r[pivot_of(r)], ring_->p(), a_)));
    CodewordSet out{ring_, D_, {}};
    out.words.reserve(sz.get_ui());
    Row cur(static_cast<std::size_t>(D_) * L_, 0);
    std::vector<std::uint64_t> digit(rows_.size(), 0);
    auto emit = [&] {
        std::vector<RingElem> w(D_);
        for (int i = 0; i < D_; ++i) {
            std::vector<std::uint32_t> x(L_);
            for (int c = 0; c < L_; ++c) x[c] = static_cast<std::uint32_t>(cur[(D_ - 1 - i) * L_ + c]);
            w[i] = ring_->from_coords(x);
        }
        out.words.push_back(std::move(w));
    };
    for (;;) {
        emit();
        std::size_t k = 0;
        for (; k < rows_.size(); ++k) {
            axpy(cur, rows_[k], pa_ - 1, pa_);  // cur += row
            if (++digit[k] < radix[k]) break;
            axpy(cur, rows_[k], radix[k] % pa_, pa_);
            digit[k] = 0;
        }
        if (k == rows_.size()) break;
    }
    std::sort(out.words.begin(), out.words.end());
    return out;
}

int Submodule::min_hamming(std::size_t cap, std::size_t search_budget) const {
    if (rows_.empty()) return 0;
    if (size() <= cap) return chaincode::min_hamming(elements(cap));
    const std::uint32_t q = ring_->size();
    std::size_t budget = search_budget;
    for (int w = 1; w <= D_; ++w) {
        // supports in lexicographic order, values over nonzero ring elements
        std::vector<int> sup(w);
        for (int i = 0; i < w; ++i) sup[i] = i;
        for (;;) {
            std::vector<std::uint32_t> val(w, 1);
            for (;;) {
                if (budget-- == 0) throw CapExceeded("minimum weight search exceeds the cap", 0);
                std::vector<RingElem> co(D_);
                for (int i = 0; i < w; ++i) co[sup[i]] = {val[i]};
                if (contains(Poly(ring_, co))) return w;
                int k = 0;
                for (; k < w; ++k) {
                    if (++val[k] < q) break;
                    val[k] = 1;
                }
                if (k == w) break;
            }
            int i = w - 1;
            while (i >= 0 && sup[i] == D_ - w + i) --i;
            if (i < 0) break;
            ++sup[i];
            for (int k = i + 1; k < w; ++k) sup[k] = sup[k - 1] + 1;
        }
    }
    return 0;
}

std::string Submodule::key() const {
    std::string s;
    for (const auto& r : rows_) {
        for (auto x : r) s += std::to_string(x) + ",";
        s += ";";
    }
    return s;
}

Submodule annihilator(const Submodule& c) {
    const RingPtr& R = c.ring();
    const int D = c.length();
    auto basis = coord_basis(R);
    auto gens = c.basis();
    std::vector<Row> images(static_cast<std::size_t>(D) * R->coord_count());
    for (int i = 0; i < D; ++i)
        for (int k = 0; k < R->coord_count(); ++k) {
            Poly e = Poly::monomial(R, basis[k], i);
            Row img;
            for (const auto& g : gens) {
                Row part = c.to_vec(e * g);
                img.insert(img.end(), part.begin(), part.end());
            }
            if (img.empty()) img.push_back(0);
            images[(D - 1 - i) * R->coord_count() + k] = std::move(img);
        }
    Submodule out(R, c.modulus());
    out.add_rows(kernel(images, R->p(), R->coord_exponent()));
    return out;
}

Submodule dual_from_ann(const Submodule& ann, RingElem lambda) {
    const RingPtr& R = ann.ring();
    const int N = ann.length();
    Submodule out(R, xn_minus(R, N, R->inverse(lambda)));
    std::vector<Row> rows;
    for (const auto& f : ann.basis()) {
        std::vector<RingElem> rev(N);
        for (int i = 0; i < N; ++i) rev[i] = f.coeff(N - 1 - i);
        rows.push_back(out.to_vec(Poly(R, rev)));
    }
    out.add_rows(std::move(rows));
    return out;
}

Submodule dual_inner_product(const Submodule& c, RingElem lambda) {
    const RingPtr& R = c.ring();
    const int N = c.length();
    const int L = R->coord_count();
    auto basis = coord_basis(R);
    auto gens = c.basis();
    std::vector<Row> images(static_cast<std::size_t>(N) * L);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < L; ++k) {
            Row img;
            for (const auto& g : gens) {
                auto co = R->coords(R->mul(basis[k], g.coeff(i)));
                img.insert(img.end(), co.begin(), co.end());
            }
            if (img.empty()) img.push_back(0);
            images[(N - 1 - i) * L + k] = std::move(img);
        }
    Submodule out(R, xn_minus(R, N, R->inverse(lambda)));
    out.add_rows(kernel(images, R->p(), R->coord_exponent()));
    return out;
}

std::vector<Submodule> all_ideals(const RingPtr& ring, const Poly& modulus, std::size_t cap) {
    auto ambient = Submodule::whole(ring, modulus).elements(cap);
    std::vector<Poly> elems;
    for (const auto& w : ambient.words) elems.push_back(Poly(ring, w));
    std::map<std::string, Submodule> found;
    std::deque<Submodule> work;
    Submodule zero(ring, modulus);
    found.emplace(zero.key(), zero);
    work.push_back(zero);
    while (!work.empty()) {
        Submodule I = std::move(work.front());
        work.pop_front();
        for (const auto& a : elems) {
            if (I.contains(a)) continue;
            Submodule J = I.plus_ideal(a);
            if (found.emplace(J.key(), J).second) work.push_back(J);
        }
    }
    std::vector<Submodule> out;
    for (auto& [k, v] : found) out.push_back(v);
    std::stable_sort(out.begin(), out.end(), [](const Submodule& x, const Submodule& y) { return x.size() < y.size(); });
    return out;
}

int kappa_bruteforce(const Decomposition& dec, int j, int omega, int t, const Poly& G) {
    const auto& c = dec.comps.at(j - 1);
    const RingPtr& R = dec.ring;
    Poly gen = pow(c.f, omega) + mul_gamma(pow(c.f, t) * G);
    auto I = Submodule::ideal(R, c.k, {gen});
    for (int k = 0; k <= omega; ++k)
        if (I.contains(mul_gamma(pow(c.f, k)))) return k;
    throw DomainError("no kappa found up to omega");
}

int binom_valuation_oracle(int p, int l, long long b) {
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), p, l);
    mpz_class c;
    mpz_bin_ui(c.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(b));
    int v = 0;
    while (c % p == 0) {
        c /= p;
        ++v;
    }
    return v;
}

bool Report::pass() const {
    bool any = false;
    for (const auto& c : checks) {
        if (c.status == "fail") return false;
        if (c.status == "pass") any = true;
    }
    return any;
}

nlohmann::json Report::to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"formula_value", c.formula_value}, {"oracle_value", c.oracle_value},
                       {"status", c.status}});
    return {{"checks", arr}, {"status", pass() ? "pass" : "fail"}};
}

FormulaValues formula_values(const CodeSpec& code) {
    FormulaValues f;
    f.size = code_size(code);
    f.gens = code_generators(code);
    f.dual = code_dual(code);
    if (code.dec.r() == 1 && code.dec.irreducible) {
        f.dist = code_distances(code);
        f.has_distances = true;
    }
    for (const auto& p : code.parts)
        f.kappa.push_back(p.kind == IdealKind::TypeIII || p.kind == IdealKind::TypeIV ? p.kappa : -1);
    return f;
}

Report verify_values(const CodeSpec& code, const FormulaValues& f, std::size_t cap) {
    const auto& dec = code.dec;
    const RingPtr& R = dec.ring;
    Report rep;
    auto add = [&](std::string name, nlohmann::json fv, nlohmann::json ov, bool ok) {
        rep.checks.push_back({std::move(name), std::move(fv), std::move(ov), ok ? "pass" : "fail"});
    };
    auto skip = [&](std::string name, nlohmann::json fv, const std::string& why) {
        rep.checks.push_back({std::move(name), std::move(fv), why, "skipped"});
    };

    auto C = Submodule::ideal(R, f.gens.modulus, f.gens.gens);
    add("ideal_axioms", "ideal", C.is_ideal() ? "ideal" : "not closed", C.is_ideal());
    add("size", big(f.size), big(C.size()), f.size == C.size());

    auto Dinner = dual_inner_product(C, dec.lambda);
    auto Df = Submodule::ideal(R, f.dual.modulus, f.dual.gens);
    add("dual", big(Df.size()), big(Dinner.size()), Df == Dinner);
    auto Dann = dual_from_ann(annihilator(C), dec.lambda);
    add("dual_from_ann", big(Dann.size()), big(Dinner.size()), Dann == Dinner);
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), R->size(), dec.N);
    add("size_product", big(total), big(C.size() * Dinner.size()), total == C.size() * Dinner.size());

    if (f.has_distances) {
        add("d_RT", f.dist.d_RT, C.min_rt(), f.dist.d_RT == C.min_rt());
        auto h = C.rt_histogram();
        add("rt_histogram", dist_json(f.dist.rt), dist_json(h), h == f.dist.rt);
        try {
            int dh = C.min_hamming(cap);
            add("d_H", f.dist.d_H, dh, dh == f.dist.d_H);
        } catch (const CapExceeded&) {
            skip("d_H", f.dist.d_H, "cap exceeded");
        }
    } else {
        skip("d_RT", nullptr, "formula needs one irreducible component");
        skip("rt_histogram", nullptr, "formula needs one irreducible component");
        skip("d_H", nullptr, "formula needs one irreducible component");
    }

    for (std::size_t j = 0; j < code.parts.size(); ++j) {
        const auto& sp = code.parts[j];
        const auto& comp = dec.comps[j];
        const std::string suffix = "_" + std::to_string(j + 1);
        auto I = Submodule::ideal(R, comp.k, component_generators(dec, sp));
        mpz_class isz = ideal_size(dec, sp);
        add("component_size" + suffix, big(isz), big(I.size()), isz == I.size());
        if (j < f.kappa.size() && f.kappa[j] >= 0) {
            int kb = kappa_bruteforce(dec, static_cast<int>(j) + 1, sp.omega, sp.t, sp.G);
            add("kappa" + suffix, f.kappa[j], kb, kb == f.kappa[j]);
        }
        if (!dec.chain() && (sp.kind == IdealKind::TypeII || sp.kind == IdealKind::TypeIII || sp.kind == IdealKind::TypeIV)) {
            long long key = sp.kind == IdealKind::TypeII ? sp.tau : sp.kind == IdealKind::TypeIII ? sp.kappa : sp.mu;
            mpz_class want;
            mpz_ui_pow_ui(want.get_mpz_t(), R->p(), R->m() * comp.d * (dec.ps - key));
            auto gK = Submodule::ideal(R, comp.k, {Poly::constant(R, R->gamma())});
            mpz_class tor = I.intersect(gK).size();
            add("torsion" + suffix, big(want), big(tor), want == tor);
        }
    }
    return rep;
}

Report verify_report(const CodeSpec& code, std::size_t cap) { return verify_values(code, formula_values(code), cap); }

}  // namespace chaincode
