#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include <qtshuffle/actions/mediant.hpp>
#include <qtshuffle/vkspace.hpp>

namespace qts {

// One action of the tower: rho_{m,n} (raising operator rho(d_+)) or rho*_{m,n}
// (raising operator rho*(d_+^*)). T_i and d_- are never changed by replication.
template <class S = CoefRat>
class ActionHandle {
public:
    using Raise = std::function<VElem<S>(const VElem<S>&)>;

    ActionHandle(int m, int n, bool star, Raise raise) : m_(m), n_(n), star_(star), raise_(std::move(raise)) {}

    int m() const { return m_; }
    int n() const { return n_; }
    bool star() const { return star_; }
    std::string label() const { return std::string(star_ ? "rho*" : "rho") + "(" + std::to_string(m_) + "," + std::to_string(n_) + ")"; }

    VElem<S> raise(const VElem<S>& f) const {
        VElem<S> out(f.k() + 1, f.cap());
        std::string ctx = detail::scalar_context<S>();
        for (const auto& [key, c] : f.terms()) {
            std::shared_ptr<const VElem<S>> img;
            auto ck = std::make_pair(ctx, key);
            {
                std::lock_guard lk(mu_);
                if (auto it = cache_.find(ck); it != cache_.end()) img = it->second;
            }
            if (!img) {
                img = std::make_shared<const VElem<S>>(raise_(VElem<S>::basis(key, key.degree() + image_headroom)));
                std::lock_guard lk(mu_);
                cache_.emplace(ck, img);
            }
            out.add_scaled(*img, c);
        }
        return out;
    }

private:
    int m_, n_;
    bool star_;
    Raise raise_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::string, VKey>, std::shared_ptr<const VElem<S>>> cache_;
};

// The pair (rho, rho*) given by two handles.
template <class S = CoefRat>
class PairOperators : public OperatorSet<S> {
public:
    PairOperators(std::shared_ptr<const ActionHandle<S>> rho, std::shared_ptr<const ActionHandle<S>> rho_star)
        : rho_(std::move(rho)), rho_star_(std::move(rho_star)) {}
    VElem<S> dplus(const VElem<S>& f) const override { return rho_->raise(f); }
    VElem<S> dplus_star(const VElem<S>& f) const override { return rho_star_->raise(f); }
    std::string label() const override { return rho_->label() + " / " + rho_star_->label(); }

private:
    std::shared_ptr<const ActionHandle<S>> rho_, rho_star_;
};

// Memoized tower of actions rho_{m,n}, rho*_{m,n}, built along the Stern-Brocot tree from
// rho_{0,1} and rho*_{1,0}:
//   rho_{L+R}(d_+)    = -(qt)^{-1} z_1 rho_L(d_+),   z_1 taken in the pair (rho_L, rho*_R),
//   rho*_{L+R}(d_+^*) = -y_1 rho*_R(d_+^*),          y_1 taken in the same pair.
// rho*_{0,1} and rho_{1,0} come from rho_{m,n}(d_+) = -q^k rho*_{m,n}(d_+^*) on V_k.
template <class S = CoefRat>
class Tower {
public:
    using Handle = std::shared_ptr<const ActionHandle<S>>;
    using Ops = std::shared_ptr<const OperatorSet<S>>;

    Tower() : base_(std::make_shared<BaseOperators<S>>()) {}

    Handle action(int m, int n, bool star) {
        check_coprime_slope(m, n);
        std::unique_lock lk(mu_);
        auto key = std::make_tuple(m, n, star);
        if (auto it = handles_.find(key); it != handles_.end()) return it->second;
        lk.unlock();
        Handle h = make_handle(m, n, star);
        lk.lock();
        return handles_.emplace(key, h).first->second;
    }

    // The correctly intertwined pair (rho_L, rho*_R); L and R must be Farey neighbours, m_R n_L - m_L n_R = 1.
    Ops pair(SlopePair L, SlopePair R) {
        if (static_cast<long>(R.first) * L.second - static_cast<long>(L.first) * R.second != 1)
            throw std::invalid_argument("Tower::pair: slopes are not Farey neighbours");
        if (L == SlopePair{0, 1} && R == SlopePair{1, 0}) return base_;
        return pair_unchecked(L, R);
    }

    // A pair containing the given handle, with its Stern-Brocot partner; y_i (resp. z_i) of
    // the pair is the derived y of rho (resp. of rho*). rho*_{0,1} and rho_{1,0} have no
    // partner in the tower and are paired with the other seed.
    Ops ops_for(int m, int n, bool star) {
        check_coprime_slope(m, n);
        if (SlopePair{m, n} == SlopePair{0, 1}) return star ? pair_unchecked({0, 1}, {0, 1}) : base_;
        if (SlopePair{m, n} == SlopePair{1, 0}) return star ? base_ : pair_unchecked({1, 0}, {1, 0});
        auto w = mediant_decompose(m, n);
        return star ? pair(w.left, {m, n}) : pair({m, n}, w.right);
    }

    const BaseOperators<S>& base() const { return *base_; }

private:
    std::shared_ptr<BaseOperators<S>> base_;
    std::mutex mu_;
    std::map<std::tuple<int, int, bool>, Handle> handles_;
    std::map<std::pair<SlopePair, SlopePair>, Ops> pairs_;

    Ops pair_unchecked(SlopePair L, SlopePair R) {
        std::unique_lock lk(mu_);
        if (auto it = pairs_.find({L, R}); it != pairs_.end()) return it->second;
        lk.unlock();
        Ops p = std::make_shared<PairOperators<S>>(action(L.first, L.second, false), action(R.first, R.second, true));
        lk.lock();
        return pairs_.emplace(std::make_pair(L, R), p).first->second;
    }

    Handle make_handle(int m, int n, bool star) {
        using F = typename ActionHandle<S>::Raise;
        F raise;
        if (!star && m == 0) raise = [](const VElem<S>& f) { return act_dplus(f); };
        else if (star && n == 0) raise = [](const VElem<S>& f) { return act_dplus_star(f); };
        else if (star && m == 0) raise = [](const VElem<S>& f) { return -(S::q_pow(-f.k()) * act_dplus(f)); };
        else if (!star && n == 0) raise = [](const VElem<S>& f) { return -(S::q_pow(f.k()) * act_dplus_star(f)); };
        else {
            auto w = mediant_decompose(m, n);
            Ops p = pair(w.left, w.right);
            if (!star)
                raise = [p](const VElem<S>& f) {
                    return -((S::q_pow(-1) * S::t_pow(-1)) * p->z(1, p->dplus_cached(f)));
                };
            else
                raise = [p](const VElem<S>& f) { return -p->y(1, p->dplus_star_cached(f)); };
        }
        return std::make_shared<const ActionHandle<S>>(m, n, star, std::move(raise));
    }
};

} // namespace qts
