#include "ainfcat/quiver.hpp"

#include <stdexcept>

namespace ainfcat {

int GradedQuiver::object_index(const std::string& name) const {
    for (int i = 0; i < object_count(); ++i)
        if (objects_[static_cast<std::size_t>(i)] == name) return i;
    throw std::out_of_range("GradedQuiver: unknown object '" + name + "'");
}

const GradedSpace& GradedQuiver::hom(int x, int y) const {
    static const GradedSpace kEmpty;
    auto it = hom_.find({x, y});
    return it == hom_.end() ? kEmpty : it->second;
}

int GradedQuiver::total_hom_dim() const {
    int n = 0;
    for (const auto& [k, s] : hom_) n += s.total_dim();
    return n;
}

GradedQuiver discrete_quiver(std::vector<std::string> objects) {
    GradedQuiver q(std::move(objects));
    for (int i = 0; i < q.object_count(); ++i) q.hom_mut(i, i).add_basis(0, "1");
    return q;
}

GradedQuiver tensor_quivers(const GradedQuiver& A, const GradedQuiver& B) {
    if (A.objects() != B.objects()) throw std::logic_error("tensor_quivers: object sets differ");
    GradedQuiver out(A.objects());
    int n = A.object_count();
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            GradedSpace& homXZ = out.hom_mut(x, z);
            for (int y = 0; y < n; ++y) {
                const GradedSpace& L = A.hom(x, y);
                const GradedSpace& R = B.hom(y, z);
                for (Deg p : L.degrees())
                    for (int i = 0; i < L.dim(p); ++i)
                        for (Deg q : R.degrees())
                            for (int j = 0; j < R.dim(q); ++j)
                                homXZ.add_basis(p + q, B.object_name(y) + "|" + L.label({p, i}) + "|" +
                                                           R.label({q, j}));
            }
        }
    return out;
}

GradedQuiver suspend(const GradedQuiver& A, int k) {
    GradedQuiver out(A.objects());
    int n = A.object_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const GradedSpace& s = A.hom(x, y);
            for (Deg d : s.degrees())
                for (int i = 0; i < s.dim(d); ++i) out.hom_mut(x, y).add_basis(d - k, s.label({d, i}));
        }
    return out;
}

}  // namespace ainfcat
