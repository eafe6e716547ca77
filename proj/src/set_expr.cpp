#include "addsys/set_expr.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace addsys {

SetExpr SetExpr::explicit_set(DigitSet set) { return SetExpr(Node(Explicit{std::move(set)})); }

SetExpr SetExpr::ray(Int modulus) {
    if (modulus < 1) raise(errc::bad_document, "ray modulus must be >= 1");
    return SetExpr(Node(Ray{std::move(modulus)}));
}

SetExpr SetExpr::dilated_node(Int factor, SetExpr inner) {
    if (factor < 1) raise(errc::bad_document, "dilation factor must be >= 1");
    return SetExpr(Node(Dilated{std::move(factor), std::make_shared<const SetExpr>(std::move(inner))}));
}

SetExpr SetExpr::bns_subsum(RadixSeq radices, IndexSet indices) {
    if (indices.tail_included() && !radices.repeats()) {
        raise(errc::bad_document, "a subsum with an included tail needs a repeating radix sequence");
    }
    if (!indices.included().empty() && !radices.has_radix(indices.included().back())) {
        raise(errc::bad_document, "subsum index exceeds the radix sequence length");
    }
    return SetExpr(Node(BnsSubsum{std::move(radices), std::move(indices)}));
}

bool SetExpr::is_finite() const {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) return true;
            else if constexpr (std::is_same_v<T, Ray>) return false;
            else if constexpr (std::is_same_v<T, Dilated>) return n.inner->is_finite();
            else return n.indices.is_finite();
        },
        *node_);
}

bool SetExpr::contains(const Int& value) const {
    if (value < 0) return false;
    return std::visit(
        [&](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) {
                return n.set.contains(value);
            } else if constexpr (std::is_same_v<T, Ray>) {
                return value % n.modulus == 0;
            } else if constexpr (std::is_same_v<T, Dilated>) {
                if (value % n.factor != 0) return false;
                return n.inner->contains(value / n.factor);
            } else {
                // Mixed-radix digits of `value` must vanish outside the index set.
                Int rest = value;
                for (int i = 1; rest > 0; ++i) {
                    if (!n.radices.has_radix(i)) return false;
                    const Int& g = n.radices.radix(i);
                    if (rest % g != 0 && !n.indices.contains(i)) return false;
                    rest /= g;
                }
                return true;
            }
        },
        *node_);
}

std::optional<Int> SetExpr::min_positive() const {
    return std::visit(
        [](const auto& n) -> std::optional<Int> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) {
                return n.set.min_positive();
            } else if constexpr (std::is_same_v<T, Ray>) {
                return n.modulus;
            } else if constexpr (std::is_same_v<T, Dilated>) {
                auto inner = n.inner->min_positive();
                if (!inner) return std::nullopt;
                return *inner * n.factor;
            } else {
                int first = n.indices.min_index();
                if (first == 0) return std::nullopt;
                return n.radices.product(first - 1);
            }
        },
        *node_);
}

std::vector<Int> SetExpr::elements_below(const Int& bound) const {
    if (bound <= 0) return {};
    return std::visit(
        [&](const auto& n) -> std::vector<Int> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) {
                const auto& elems = n.set.elements();
                auto end = std::lower_bound(elems.begin(), elems.end(), bound);
                return std::vector<Int>(elems.begin(), end);
            } else if constexpr (std::is_same_v<T, Ray>) {
                std::vector<Int> out;
                for (Int v = 0; v < bound; v += n.modulus) out.push_back(v);
                return out;
            } else if constexpr (std::is_same_v<T, Dilated>) {
                std::vector<Int> out = n.inner->elements_below(ceil_div(bound, n.factor));
                for (Int& v : out) v *= n.factor;
                return out;
            } else {
                std::vector<Int> sums = {Int(0)};
                for (int i = 1; n.radices.has_radix(i); ++i) {
                    Int base = n.radices.product(i - 1);
                    if (base >= bound) break;
                    if (!n.indices.contains(i)) continue;
                    const Int& g = n.radices.radix(i);
                    std::size_t prior = sums.size();
                    for (Int d = 1; d < g; ++d) {
                        Int step = base * d;
                        if (step >= bound) break;
                        for (std::size_t k = 0; k < prior; ++k) {
                            Int v = sums[k] + step;
                            if (v < bound) sums.push_back(std::move(v));
                        }
                    }
                }
                std::sort(sums.begin(), sums.end());
                return sums;
            }
        },
        *node_);
}

SetExpr SetExpr::dilate(const Int& d) const {
    assert(d >= 1);
    if (d == 1) return *this;
    return std::visit(
        [&](const auto& n) -> SetExpr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) {
                return explicit_set(n.set.dilated(d));
            } else if constexpr (std::is_same_v<T, Ray>) {
                return ray(n.modulus * d);
            } else if constexpr (std::is_same_v<T, Dilated>) {
                return SetExpr(Node(Dilated{n.factor * d, n.inner}));
            } else {
                return dilated_node(d, *this);
            }
        },
        *node_);
}

std::optional<SetExpr> SetExpr::divided_exact(const Int& g) const {
    assert(g >= 1);
    if (g == 1) return *this;
    return std::visit(
        [&](const auto& n) -> std::optional<SetExpr> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) {
                auto divided = n.set.divided_exact(g);
                if (!divided) return std::nullopt;
                return explicit_set(std::move(*divided));
            } else if constexpr (std::is_same_v<T, Ray>) {
                if (n.modulus % g != 0) return std::nullopt;
                return ray(n.modulus / g);
            } else if constexpr (std::is_same_v<T, Dilated>) {
                Int shared = gcd(n.factor, g);
                auto inner = n.inner->divided_exact(g / shared);
                if (!inner) return std::nullopt;
                return inner->dilate(n.factor / shared);
            } else {
                // Divisible as a whole only by a full product prefix G_t
                // lying below every included block.
                int first = n.indices.min_index();
                if (first == 0) return explicit_set(DigitSet::zero());
                for (int t = 0; t < first; ++t) {
                    Int p = n.radices.product(t);
                    if (p == g) {
                        return bns_subsum(n.radices.dropped_prefix(t), n.indices.shifted_down(t));
                    }
                    if (p > g) break;
                }
                return std::nullopt;
            }
        },
        *node_);
}

std::optional<DigitSet> SetExpr::as_digit_set() const {
    if (!is_finite()) return std::nullopt;
    return std::visit(
        [&](const auto& n) -> std::optional<DigitSet> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) {
                return n.set;
            } else if constexpr (std::is_same_v<T, Ray>) {
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, Dilated>) {
                auto inner = n.inner->as_digit_set();
                if (!inner) return std::nullopt;
                return inner->dilated(n.factor);
            } else {
                Int past_max = 1;
                for (int i : n.indices.included()) {
                    past_max += n.radices.product(i - 1) * (n.radices.radix(i) - 1);
                }
                return DigitSet::from_sorted(elements_below(past_max));
            }
        },
        *node_);
}

std::optional<Int> SetExpr::as_ray_modulus() const {
    return std::visit(
        [](const auto& n) -> std::optional<Int> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Ray>) {
                return n.modulus;
            } else if constexpr (std::is_same_v<T, Dilated>) {
                auto inner = n.inner->as_ray_modulus();
                if (!inner) return std::nullopt;
                return *inner * n.factor;
            } else {
                return std::nullopt;
            }
        },
        *node_);
}

std::string SetExpr::to_string() const {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Explicit>) {
                std::ostringstream out;
                out << '{';
                const auto& elems = n.set.elements();
                for (std::size_t i = 0; i < elems.size(); ++i) {
                    if (i) out << ", ";
                    out << elems[i].get_str();
                }
                out << '}';
                return out.str();
            } else if constexpr (std::is_same_v<T, Ray>) {
                return n.modulus.get_str() + "*N0";
            } else if constexpr (std::is_same_v<T, Dilated>) {
                return n.factor.get_str() + "*(" + n.inner->to_string() + ")";
            } else {
                std::ostringstream out;
                out << "subsum(blocks=";
                out << '{';
                const auto& inc = n.indices.included();
                for (std::size_t i = 0; i < inc.size(); ++i) {
                    if (i) out << ',';
                    out << inc[i];
                }
                if (n.indices.tail_included()) out << (inc.empty() ? "" : ",") << ">" << n.indices.window();
                out << "}, radices=[";
                const auto& prefix = n.radices.prefix();
                for (std::size_t i = 0; i < prefix.size(); ++i) {
                    if (i) out << ',';
                    out << prefix[i].get_str();
                }
                out << (n.radices.repeats() ? " repeat" : "") << "])";
                return out.str();
            }
        },
        *node_);
}

bool SetExpr::operator==(const SetExpr& other) const {
    if (node_ == other.node_) return true;
    if (node_->index() != other.node_->index()) return false;
    return std::visit(
        [&](const auto& a) -> bool {
            using T = std::decay_t<decltype(a)>;
            const auto& b = std::get<T>(*other.node_);
            if constexpr (std::is_same_v<T, Explicit>) {
                return a.set == b.set;
            } else if constexpr (std::is_same_v<T, Ray>) {
                return a.modulus == b.modulus;
            } else if constexpr (std::is_same_v<T, Dilated>) {
                return a.factor == b.factor && *a.inner == *b.inner;
            } else {
                return a.radices == b.radices && a.indices == b.indices;
            }
        },
        *node_);
}

std::vector<Int> sumset(const SetExpr& a, const SetExpr& b, const Int& bound) {
    std::vector<Int> xs = a.elements_below(bound);
    std::vector<Int> ys = b.elements_below(bound);
    std::set<Int> sums;
    for (const Int& x : xs) {
        for (const Int& y : ys) {
            Int s = x + y;
            if (s < bound) sums.insert(std::move(s));
        }
    }
    return std::vector<Int>(sums.begin(), sums.end());
}

}  // namespace addsys
