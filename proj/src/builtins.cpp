#include "multiarr/builtins.hpp"

#include <functional>
#include <map>

namespace multiarr {

namespace {

Hyperplane plane(std::initializer_list<long> normal, long constant = 0) {
  Hyperplane h;
  for (long v : normal) h.normal.emplace_back(v);
  h.constant = constant;
  return h;
}

ArrangementInput simple(size_t dim, std::vector<Hyperplane> hs) {
  const size_t n = hs.size();
  return {Arrangement(dim, std::move(hs)), std::vector<int>(n, 1)};
}

ArrangementInput from_roots(char type, size_t rank) { return simple(rank, root_system(type, rank).roots.hyperplanes()); }

ArrangementInput coned(size_t dim, std::vector<Hyperplane> hs) {
  const Arrangement b = cone(Arrangement(dim, std::move(hs)));
  return {b, std::vector<int>(b.size(), 1)};
}

ArrangementInput example_28_shifted() {
  std::vector<Hyperplane> hs;
  auto levels = [&](std::initializer_list<long> n, long lo, long hi) {
    for (long k = lo; k <= hi; ++k) {
      Hyperplane h;
      for (long v : n) h.normal.emplace_back(v);
      h.normal.emplace_back(-k);
      hs.push_back(std::move(h));
    }
  };
  levels({1, 0, 0}, -1, 2);
  levels({0, 1, 0}, -1, 2);
  levels({0, 0, 1}, -1, 2);
  levels({1, 1, 0}, -1, 3);
  levels({0, 1, 1}, -1, 3);
  levels({1, 1, 1}, 0, 3);
  hs.push_back(plane({0, 0, 0, 1}));
  return simple(4, std::move(hs));
}

const std::map<std::string, std::function<ArrangementInput()>>& table() {
  static const std::map<std::string, std::function<ArrangementInput()>> t = {
      {"boolean3", [] { return simple(3, {plane({1, 0, 0}), plane({0, 1, 0}), plane({0, 0, 1})}); }},
      {"A2", [] { return simple(2, {plane({1, 0}), plane({0, 1}), plane({1, 1})}); }},
      {"A3", [] { return from_roots('A', 3); }},
      {"D4", [] { return from_roots('D', 4); }},
      {"shi-A2-cone",
       [] {
         const Arrangement b = shi_catalan(root_system('A', 2), 1, Parity::Shi);
         return ArrangementInput{b, std::vector<int>(b.size(), 1)};
       }},
      {"example-1.4",
       [] {
         return ArrangementInput{
             Arrangement(2, {plane({1, 0}), plane({0, 1}), plane({1, -1}), plane({1, -2}), plane({1, -3})}),
             {3, 3, 1, 1, 1}};
       }},
      {"example-2.8",
       [] {
         return ArrangementInput{Arrangement(3, {plane({1, 0, 0}), plane({0, 1, 0}), plane({0, 0, 1}),
                                                 plane({1, 1, 0}), plane({0, 1, 1}), plane({1, 1, 1})}),
                                 {4, 4, 4, 5, 5, 4}};
       }},
      {"example-2.8-shifted", example_28_shifted},
      {"remark-2.3",
       [] {
         return simple(3, {plane({1, 0, 0}), plane({0, 1, 0}), plane({0, 0, 1}), plane({1, 1, 0}),
                           plane({1, 0, -1}), plane({0, 1, -1}), plane({1, 1, -2})});
       }},
      {"remark-2.7",
       [] { return ArrangementInput{Arrangement(2, {plane({1, 0}), plane({0, 1}), plane({1, 1})}), {2, 2, 1}}; }},
      {"remark-2.7-a",
       [] { return coned(2, {plane({1, 0}), plane({1, 0}, 1), plane({0, 1}), plane({0, 1}, 1), plane({1, 1})}); }},
      {"remark-2.7-b",
       [] {
         return coned(2, {plane({1, 0}), plane({1, 0}, 1), plane({0, 1}), plane({0, 1}, 1), plane({1, 1}, 1)});
       }},
      {"generic4",
       [] { return simple(3, {plane({1, 0, 0}), plane({0, 1, 0}), plane({0, 0, 1}), plane({1, 1, 1})}); }},
  };
  return t;
}

}  // namespace

std::optional<ArrangementInput> builtin(const std::string& name) {
  const auto& t = table();
  auto it = t.find(name);
  if (it == t.end()) return std::nullopt;
  return it->second();
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : table()) out.push_back(name);
  return out;
}

}  // namespace multiarr
