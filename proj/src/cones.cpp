#include "cones.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"
#include "rng.hpp"

namespace weylfold {

QVec canonical_ray(const QVec& v) {
    mpz_class den_lcm = 1;
    for (const Rat& q : v) den_lcm = lcm(den_lcm, q.get_den());
    mpz_class num_gcd = 0;
    std::vector<mpz_class> ints;
    for (const Rat& q : v) {
        mpz_class z = q.get_num() * (den_lcm / q.get_den());
        num_gcd = gcd(num_gcd, z);
        ints.push_back(std::move(z));
    }
    if (num_gcd == 0) throw invalid_input("zero vector is not a ray");
    QVec out;
    for (const mpz_class& z : ints) out.emplace_back(z / num_gcd);
    return out;
}

namespace {

std::vector<QVec> dedup_canonical(const std::vector<QVec>& rays) {
    std::set<QVec> seen;
    for (const QVec& r : rays) seen.insert(canonical_ray(r));
    return {seen.begin(), seen.end()};
}

QMat rows_of(const std::vector<QVec>& rows, int d) {
    QMat m(static_cast<int>(rows.size()), d);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < d; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    return m;
}

int rank_of(const std::vector<QVec>& vecs, int d) {
    return vecs.empty() ? 0 : rank(rows_of(vecs, d));
}

// Extreme rays of {t : <t,u> >= 0 for all u in U} when span(U) is all of
// R^k; the dual is pointed, so the extreme rays generate it.
std::vector<QVec> full_dim_dual(int k, const std::vector<QVec>& U) {
    std::vector<QVec> out;
    if (k == 1) {
        int sign = 0;
        for (const QVec& u : U) {
            const int s = rat_sign(u[0]);
            if (sign == 0) sign = s;
            if (s != sign) return out;
        }
        out.push_back({Rat(sign)});
        return out;
    }
    std::set<QVec> found;
    std::vector<int> subset(k - 1);
    std::function<void(int, int)> choose = [&](int from, int depth) {
        if (depth == k - 1) {
            QMat m(k - 1, k);
            for (int r = 0; r < k - 1; ++r)
                for (int c = 0; c < k; ++c) m.at(r, c) = U[subset[r]][c];
            const auto ker = kernel_basis(m);
            if (ker.size() != 1) return;
            for (int flip = 0; flip < 2; ++flip) {
                QVec t = ker[0];
                if (flip)
                    for (Rat& x : t) x = -x;
                bool feasible = true;
                std::vector<QVec> tight;
                for (const QVec& u : U) {
                    const int s = rat_sign(dot(t, u));
                    if (s < 0) {
                        feasible = false;
                        break;
                    }
                    if (s == 0) tight.push_back(u);
                }
                if (feasible && rank_of(tight, k) == k - 1) found.insert(canonical_ray(t));
            }
            return;
        }
        for (int i = from; i <= static_cast<int>(U.size()) - (k - 1 - depth); ++i) {
            subset[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    if (static_cast<int>(U.size()) >= k - 1) choose(0, 0);
    return {found.begin(), found.end()};
}

}  // namespace

std::vector<QVec> dual_rays(int d, const std::vector<QVec>& rays) {
    const std::vector<QVec> R = dedup_canonical(rays);
    std::set<QVec> out;
    if (R.empty()) {
        for (int i = 0; i < d; ++i)
            for (int s : {1, -1}) {
                QVec e(d, Rat(0));
                e[i] = s;
                out.insert(e);
            }
        return {out.begin(), out.end()};
    }
    // The orthogonal complement of span(R) is contained in the dual as
    // lineality; the rest is the dual taken inside the span.
    const std::vector<QVec> comp = kernel_basis(rows_of(R, d));
    const int k = d - static_cast<int>(comp.size());
    for (const QVec& b : comp) {
        out.insert(canonical_ray(b));
        QVec nb = b;
        for (Rat& x : nb) x = -x;
        out.insert(canonical_ray(nb));
    }
    if (k > 0) {
        // Basis of the span chosen greedily from the rays.
        std::vector<QVec> basis;
        for (const QVec& r : R) {
            basis.push_back(r);
            if (rank_of(basis, d) < static_cast<int>(basis.size())) basis.pop_back();
            if (static_cast<int>(basis.size()) == k) break;
        }
        QMat bmat(d, k);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < k; ++j) bmat.at(i, j) = basis[j][i];
        // In basis coordinates t (y = B t), <y, r> = <t, M a_r> with
        // M = B^T B and r = B a_r.
        QMat gram(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) gram.at(i, j) = dot(basis[i], basis[j]);
        std::vector<QVec> U;
        for (const QVec& r : R) {
            QVec a;
            if (!solve(bmat, r, a)) throw consistency_error("ray outside its own span");
            U.push_back(act(gram, a));
        }
        U = dedup_canonical(U);
        for (const QVec& t : full_dim_dual(k, U)) {
            QVec y(d, Rat(0));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < k; ++j) y[i] += bmat.at(i, j) * t[j];
            out.insert(canonical_ray(y));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<QVec> extreme_rays(int d, const std::vector<QVec>& rays) {
    return dual_rays(d, dual_rays(d, rays));
}

bool cone_contains(const std::vector<QVec>& dual, const QVec& p) {
    for (const QVec& y : dual)
        if (rat_sign(dot(y, p)) < 0) return false;
    return true;
}

namespace {

struct FanGeometry {
    std::vector<std::vector<QVec>> chamber_duals;  // facet normals per chamber
    std::vector<QVec> wall_normals;                // input + derived, deduped up to sign
};

QVec negate(const QVec& v) {
    QVec w = v;
    for (Rat& x : w) x = -x;
    return w;
}

QVec canonical_up_to_sign(const QVec& v) {
    QVec c = canonical_ray(v);
    for (const Rat& x : c) {
        if (x > 0) return c;
        if (x < 0) return canonical_ray(negate(c));
    }
    return c;
}

FanGeometry analyze_fan(const MoriFanData& fan) {
    const int d = fan.dim;
    if (d < 1) throw invalid_input("fan dimension must be positive");
    if (fan.chambers.empty()) throw invalid_input("fan has no chambers");
    for (const auto& h : fan.hyperplanes) {
        if (static_cast<int>(h.normal.size()) != d) throw invalid_input("hyperplane normal has wrong dimension");
        canonical_ray(h.normal);  // rejects the zero normal
    }
    FanGeometry geo;
    std::set<QVec> walls;
    for (const auto& h : fan.hyperplanes) walls.insert(canonical_up_to_sign(h.normal));
    for (const auto& ch : fan.chambers) {
        if (ch.rays.empty()) throw invalid_input("degenerate chamber: no rays");
        for (const QVec& r : ch.rays) {
            if (static_cast<int>(r.size()) != d) throw invalid_input("chamber ray has wrong dimension");
            canonical_ray(r);
        }
        if (rank_of(ch.rays, d) != d) throw invalid_input("degenerate chamber: not full-dimensional");
        auto dual = dual_rays(d, ch.rays);
        for (const QVec& y : dual) walls.insert(canonical_up_to_sign(y));
        geo.chamber_duals.push_back(std::move(dual));
    }
    // Pairwise full-dimensional overlap would make the data not a fan.
    for (size_t i = 0; i < fan.chambers.size(); ++i)
        for (size_t j = i + 1; j < fan.chambers.size(); ++j) {
            std::vector<QVec> both = geo.chamber_duals[i];
            both.insert(both.end(), geo.chamber_duals[j].begin(), geo.chamber_duals[j].end());
            if (rank_of(dual_rays(d, both), d) == d)
                throw invalid_input("chambers " + std::to_string(i) + " and " + std::to_string(j) +
                                    " overlap in full dimension");
        }
    geo.wall_normals.assign(walls.begin(), walls.end());
    return geo;
}

// Relative-interior point: a positive combination of the rays avoiding every
// wall that does not contain the face. Weights t^i for the first t that
// works; each bad wall excludes at most |rays|-1 values of t.
QVec interior_sample(const std::vector<QVec>& rays, int d, const std::vector<QVec>& walls) {
    if (rays.empty()) return QVec(d, Rat(0));
    std::vector<QVec> bad;
    for (const QVec& h : walls) {
        bool contains_face = true;
        for (const QVec& r : rays)
            if (dot(h, r) != 0) contains_face = false;
        if (!contains_face) bad.push_back(h);
    }
    for (std::int64_t t = 1;; ++t) {
        QVec p(d, Rat(0));
        Rat weight = 1;
        for (const QVec& r : rays) {
            for (int i = 0; i < d; ++i) p[i] += weight * r[i];
            weight *= t;
        }
        bool ok = p != QVec(d, Rat(0));  // faces with lineality can cancel
        for (const QVec& h : bad)
            if (ok && dot(h, p) == 0) ok = false;
        if (ok) return p;
        if (t > static_cast<std::int64_t>(rays.size() * (bad.size() + 2)))
            throw consistency_error("failed to find a relative-interior sample");
    }
}

}  // namespace

std::vector<Face> face_lattice(const MoriFanData& fan) {
    const int d = fan.dim;
    const FanGeometry geo = analyze_fan(fan);

    std::map<std::vector<QVec>, std::set<int>> support;  // canonical rays -> chambers
    for (size_t ci = 0; ci < fan.chambers.size(); ++ci) {
        const std::vector<QVec> rays = dedup_canonical(fan.chambers[ci].rays);
        const std::vector<QVec>& facets = geo.chamber_duals[ci];
        const int nf = static_cast<int>(facets.size());
        if (nf > 20) throw budget_exceeded("too many chamber facets for face enumeration");
        for (unsigned mask = 0; mask < (1u << nf); ++mask) {
            std::vector<QVec> face_rays;
            for (const QVec& r : rays) {
                bool on_all = true;
                for (int f = 0; f < nf && on_all; ++f)
                    if ((mask >> f) & 1u)
                        if (dot(facets[f], r) != 0) on_all = false;
                if (on_all) face_rays.push_back(r);
            }
            support[face_rays].insert(static_cast<int>(ci));
        }
    }
    support[{}];  // the apex belongs to the lattice even if no facets cut it out

    std::vector<Face> out;
    for (const auto& [rays, chambers] : support) {
        Face f;
        f.rays = rays;
        f.dim = rank_of(rays, d);
        f.chambers.assign(chambers.begin(), chambers.end());
        for (int h = 0; h < static_cast<int>(fan.hyperplanes.size()); ++h) {
            bool on = true;
            for (const QVec& r : rays)
                if (dot(fan.hyperplanes[h].normal, r) != 0) on = false;
            if (on) f.active.push_back(h);
        }
        f.sample = interior_sample(rays, d, geo.wall_normals);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.rays < b.rays;
    });
    return out;
}

std::vector<int> face_generator_indices(const Face& face, const MoriFanData& fan,
                                        const NamikawaWeylGroup& wx) {
    std::set<int> gens;
    for (int h : face.active) {
        const std::string& tag = fan.hyperplanes[h].tag;
        if (tag.empty()) continue;  // small-contraction walls carry no generator
        gens.insert(generator_index(wx, tag));
    }
    return {gens.begin(), gens.end()};
}

ParabolicSubgroup face_weyl(const Face& face, const MoriFanData& fan, const NamikawaWeylGroup& wx) {
    return parabolic(wx.group, face_generator_indices(face, fan, wx));
}

PsiFaceReport psi_face_map(const std::vector<Face>& faces, const MoriFanData& fan,
                           const NamikawaWeylGroup& wx) {
    PsiFaceReport rep;
    rep.chamber_count = static_cast<int>(fan.chambers.size());
    const int g = static_cast<int>(wx.generator_tags.size());
    if (g > 20) throw budget_exceeded("too many generators for subset enumeration");

    std::set<std::vector<int>> distinct;
    bool injective = true;
    for (const Face& f : faces) {
        auto gens = face_generator_indices(f, fan, wx);
        if (!distinct.insert(gens).second) injective = false;
        rep.face_generators.push_back(std::move(gens));
    }
    rep.injective = injective;
    rep.surjective = distinct.size() == (1ull << g);
    rep.bijective = rep.surjective && rep.injective;
    if (rep.bijective != (rep.chamber_count == 1))
        throw consistency_error("face-to-parabolic map bijectivity disagrees with chamber count");
    return rep;
}

bool fundamental_domain_check(const MoriFanData& fan, int samples, std::uint64_t seed) {
    if (fan.weyl_action.empty()) throw invalid_input("missing weyl action");
    const int d = fan.dim;
    for (const QMat& m : fan.weyl_action)
        if (m.rows != d || m.cols != d) throw invalid_input("weyl action matrix has wrong dimension");
    const FanGeometry geo = analyze_fan(fan);

    // Close the action to the full finite group.
    std::set<std::vector<Rat>> seen;
    std::vector<QMat> group{QMat::identity(d)};
    seen.insert(group[0].a);
    for (size_t head = 0; head < group.size(); ++head) {
        for (const QMat& g : fan.weyl_action) {
            QMat next = qmul(group[head], g);
            if (seen.insert(next.a).second) {
                group.push_back(std::move(next));
                if (group.size() > 10000) throw budget_exceeded("weyl action group too large");
            }
        }
    }

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        QVec p(d);
        std::set<QVec> orbit_pts;
        bool good = false;
        for (int tries = 0; tries < 500 && !good; ++tries) {
            bool zero = true;
            for (int i = 0; i < d; ++i) {
                p[i] = Rat(rng.uniform(-9, 9));
                if (p[i] != 0) zero = false;
            }
            if (zero) continue;
            // Generic sample: no orbit point on any wall.
            orbit_pts.clear();
            good = true;
            for (const QMat& g : group) {
                QVec q = act(g, p);
                for (const QVec& h : geo.wall_normals)
                    if (dot(h, q) == 0) {
                        good = false;
                        break;
                    }
                if (!good) break;
                orbit_pts.insert(std::move(q));
            }
        }
        if (!good) throw invalid_input("could not sample a point off the hyperplane arrangement");

        int inside = 0;
        for (const QVec& q : orbit_pts)
            for (const auto& dual : geo.chamber_duals)
                if (cone_contains(dual, q)) {
                    ++inside;
                    break;
                }
        if (inside != 1) return false;
    }
    return true;
}

}  // namespace weylfold
