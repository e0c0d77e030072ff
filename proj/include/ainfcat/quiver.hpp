#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ainfcat/graded.hpp"

namespace ainfcat {

/// Graded quiver: a finite ordered object set with a graded hom space for
/// every ordered pair. All hom data throughout the library lives in the
/// suspended (sA) convention.
class GradedQuiver {
public:
    GradedQuiver() = default;
    explicit GradedQuiver(std::vector<std::string> objects) : objects_(std::move(objects)) {}

    int object_count() const { return static_cast<int>(objects_.size()); }
    const std::string& object_name(int i) const { return objects_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& objects() const { return objects_; }
    int object_index(const std::string& name) const;

    const GradedSpace& hom(int x, int y) const;
    GradedSpace& hom_mut(int x, int y) { return hom_[{x, y}]; }

    int total_hom_dim() const;

private:
    std::vector<std::string> objects_;
    std::map<std::pair<int, int>, GradedSpace> hom_;
};

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

/// Morphism of graded quivers: object map plus one GradedMap per hom pair,
/// all of a common degree.
struct QuiverMap {
    std::vector<int> obj;
    std::map<std::pair<int, int>, GradedMap> comp;
    Deg degree = 0;

    const GradedMap& at(int x, int y) const { return comp.at({x, y}); }
};

/// The discrete quiver kS: k in degree 0 on the diagonal, zero elsewhere.
GradedQuiver discrete_quiver(std::vector<std::string> objects);

/// Tensor product over a shared object set:
/// (A (x) B)(X,Z) = (+)_Y A(X,Y) (x) B(Y,Z). Basis order is (intermediate
/// object, left factor, right factor); labels record all three.
GradedQuiver tensor_quivers(const GradedQuiver& A, const GradedQuiver& B);

/// Shift all degrees: the degree-n part of the result is the degree-(n+k)
/// part of the input.
GradedQuiver suspend(const GradedQuiver& A, int k);

}  // namespace ainfcat
