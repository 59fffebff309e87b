#include <array>
#include <map>

#include "cubikit/fixtures.hpp"
#include "cubikit/transformations.hpp"

namespace cubikit::fixtures {

namespace {

// Transformations over one instance for every quadruple of `functors` with a
// natural component, found by search over the 1-cells.
void add_all_transformations(TransformationFamily& fam) {
  const auto& c = *fam.instances.front();
  const auto& fs = fam.functors;
  for (const auto& F : fs)
    for (const auto& G : fs)
      for (const auto& H : fs)
        for (const auto& K : fs)
          for (int k = 0; k < c.cells.size(1); ++k) {
            NatTrans t{"", F, G, H, K, {k}};
            if (!check_naturality(t).empty()) continue;
            t.name = "τ" + std::to_string(fam.transformations.size()) + "=" + c.cells.label(1, k);
            fam.transformations.push_back(std::move(t));
          }
}

}  // namespace

TransformationFamily integer_loop_family(int n) {
  auto c = std::make_shared<const StrictInstance>(integer_loop(n));
  const auto& x = c->cells;
  StrictFunctor neg;
  neg.name = "neg";
  neg.source = c;
  neg.target = c;
  neg.maps.resize(3);
  neg.maps[0] = {0};
  neg.maps[1] = c->reversors->maps[1][0];
  std::map<std::array<int, 4>, int> by_boundary;
  auto boundary = [&](int s, bool negate) {
    std::array<int, 4> b{};
    int i = 0;
    for (int j = 1; j <= 2; ++j)
      for (Sign g : {Sign::Minus, Sign::Plus}) {
        const int e = x.face(2, j, g, s);
        b[i++] = negate ? neg.maps[1][e] : e;
      }
    return b;
  };
  for (int s = 0; s < x.size(2); ++s) by_boundary[boundary(s, false)] = s;
  for (int s = 0; s < x.size(2); ++s) neg.maps[2].push_back(by_boundary.at(boundary(s, true)));

  TransformationFamily fam;
  fam.instances = {c};
  fam.functors = {identity_functor(c), neg};
  add_all_transformations(fam);
  return fam;
}

TransformationFamily s3_conjugation_family() {
  auto c = std::make_shared<const StrictInstance>(symmetric_group3());
  const int swap = c->cells.find(1, "p102");
  StrictFunctor conj;
  conj.name = "conj";
  conj.source = c;
  conj.target = c;
  conj.maps = {{0}, {}};
  for (int f = 0; f < c->cells.size(1); ++f)
    conj.maps[1].push_back(c->compose(1, 1, c->compose(1, 1, swap, f), swap));

  TransformationFamily fam;
  fam.instances = {c};
  fam.functors = {identity_functor(c), conj};
  add_all_transformations(fam);
  return fam;
}

}  // namespace cubikit::fixtures
