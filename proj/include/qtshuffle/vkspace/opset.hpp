#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>

#include <qtshuffle/vkspace/operators.hpp>
#include <qtshuffle/vkspace/word.hpp>

namespace qts {

// Degree headroom for cached basis images; a raising operator of slope (m,n) adds n.
inline constexpr int image_headroom = 64;

namespace detail {

// Identifies the evaluation context of a scalar type, so cached images stay valid.
template <class S>
std::string scalar_context() { return {}; }
template <>
inline std::string scalar_context<FastScalar>() {
    const auto& p = FastScalar::point();
    return p.u0.str() + "," + p.t0.str();
}

} // namespace detail

// A correctly intertwined pair (rho, rho*) acting on V_*. T_i and d_- are shared by every
// pair; d_+ belongs to rho and d_+^* to rho*. y_i and z_i are derived from them unless
// overridden, ytilde_i from its defining train word.
template <class S = CoefRat>
class OperatorSet {
public:
    virtual ~OperatorSet() = default;

    virtual VElem<S> dplus(const VElem<S>& f) const = 0;
    virtual VElem<S> dplus_star(const VElem<S>& f) const = 0;
    virtual std::string label() const = 0;

    // y_1 = (d+ d- - d- d+) T_{k down 1} / (q^{k-1}(q-1)), y_{i+1} = q T_i^{-1} y_i T_i^{-1}.
    virtual VElem<S> y(int i, const VElem<S>& f) const { return cached(Gen{Gen::Y, i}, f); }
    // z_1 = q^k/(1-q) (d+* d- - d- d+*) T*_{k down 1}, z_{i+1} = q^{-1} T_i z_i T_i.
    virtual VElem<S> z(int i, const VElem<S>& f) const { return cached(Gen{Gen::Z, i}, f); }

    VElem<S> dplus_cached(const VElem<S>& f) const { return cached(Gen{Gen::DPlus}, f); }
    VElem<S> dplus_star_cached(const VElem<S>& f) const { return cached(Gen{Gen::DPlusStar}, f); }

    VElem<S> apply(const Gen& g, const VElem<S>& f) const {
        switch (g.kind) {
        case Gen::T: return act_T(g.i, f);
        case Gen::Tinv: return act_T(g.i, f, true);
        case Gen::DMinus: return act_dminus(f);
        case Gen::DPlus: return dplus_cached(f);
        case Gen::DPlusStar: return dplus_star_cached(f);
        case Gen::Y: return y(g.i, f);
        case Gen::Z: return z(g.i, f);
        case Gen::YTilde:
            if (g.i < 1 || g.i > f.k()) throw std::out_of_range("ytilde: index out of range");
            return apply(ytilde_expansion(g.i, f.k()), f);
        }
        throw std::logic_error("OperatorSet: unknown generator");
    }

    VElem<S> apply(const Word& w, VElem<S> f) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it) f = apply(*it, f);
        return f;
    }

protected:
    // Formula for a single generator before caching.
    VElem<S> compute(const Gen& g, const VElem<S>& f) const {
        int k = f.k();
        switch (g.kind) {
        case Gen::DPlus: return dplus(f);
        case Gen::DPlusStar: return dplus_star(f);
        case Gen::Y: {
            if (g.i < 1 || g.i > k) throw std::out_of_range("y: index out of range");
            if (g.i > 1) {
                VElem<S> r = act_T(g.i - 1, f, true);
                r = y(g.i - 1, r);
                return S::q_pow(1) * act_T(g.i - 1, r, true);
            }
            VElem<S> h = apply(down(k, 1), f);
            VElem<S> c = dplus_cached(act_dminus(h)) - act_dminus(dplus_cached(h));
            return S::q_pow(1 - k) * divide_by_q_minus_one(c);
        }
        case Gen::Z: {
            if (g.i < 1 || g.i > k) throw std::out_of_range("z: index out of range");
            if (g.i > 1) {
                VElem<S> r = act_T(g.i - 1, f);
                r = z(g.i - 1, r);
                return S::q_pow(-1) * act_T(g.i - 1, r);
            }
            VElem<S> h = apply(down_star(k, 1), f);
            VElem<S> c = act_dminus(dplus_star_cached(h)) - dplus_star_cached(act_dminus(h));
            return S::q_pow(k) * divide_by_q_minus_one(c);
        }
        default: return apply(g, f);
        }
    }

    // Linear extension of cached images of basis vectors. Every generator is homogeneous,
    // so an image computed with enough headroom is valid under any cap.
    VElem<S> cached(const Gen& g, const VElem<S>& f) const {
        VElem<S> out(g.kind == Gen::DPlus || g.kind == Gen::DPlusStar ? f.k() + 1 : f.k(), f.cap());
        std::string ctx = detail::scalar_context<S>();
        for (const auto& [key, c] : f.terms()) {
            std::shared_ptr<const VElem<S>> img;
            auto ck = std::make_tuple(ctx, static_cast<int>(g.kind), g.i, key);
            {
                std::lock_guard lk(mu_);
                if (auto it = cache_.find(ck); it != cache_.end()) img = it->second;
            }
            if (!img) {
                img = std::make_shared<const VElem<S>>(compute(g, VElem<S>::basis(key, key.degree() + image_headroom)));
                std::lock_guard lk(mu_);
                cache_.emplace(ck, img);
            }
            out.add_scaled(*img, c);
        }
        return out;
    }

private:
    using CacheKey = std::tuple<std::string, int, int, VKey>;
    mutable std::mutex mu_;
    mutable std::map<CacheKey, std::shared_ptr<const VElem<S>>> cache_;
};

// The operators of the two base actions: rho_{0,1} with y_i acting by multiplication, and rho*_{1,0}.
template <class S = CoefRat>
class BaseOperators : public OperatorSet<S> {
public:
    VElem<S> dplus(const VElem<S>& f) const override { return act_dplus(f); }
    VElem<S> dplus_star(const VElem<S>& f) const override { return act_dplus_star(f); }
    VElem<S> y(int i, const VElem<S>& f) const override { return mult_y(i, f); }
    std::string label() const override { return "rho(0,1) / rho*(1,0)"; }

    // y_i from the commutator formula and the T-recursion, bypassing multiplication.
    VElem<S> y_derived(int i, const VElem<S>& f) const {
        if (i == 1) return this->compute(Gen{Gen::Y, 1}, f);
        VElem<S> r = y_derived(i - 1, act_T(i - 1, f, true));
        return S::q_pow(1) * act_T(i - 1, r, true);
    }
};

} // namespace qts
