// Writes the sample files under data/: one group file per catalog entry,
// a few operator files and a brace. Output is canonical, so rerunning it
// leaves the tree unchanged.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>

#include "rrb/catalog.hpp"
#include "rrb/io.hpp"

using namespace rrb;
namespace fs = std::filesystem;

namespace {

std::string file_stem(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::replace(name.begin(), name.end(), '^', '_');
  return name;
}

// Operator file whose groups are references into ../groups.
Json with_group_refs(const RelRB& r, const std::string& h, const std::string& g, Json phi) {
  Json j = relrb_to_json(r);
  j["h"] = "../groups/" + h + ".json";
  j["g"] = "../groups/" + g + ".json";
  j["phi"] = std::move(phi);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: gen_data DATA_DIR\n");
    return 64;
  }
  const fs::path root = argv[1];
  fs::create_directories(root / "groups");
  fs::create_directories(root / "operators");
  fs::create_directories(root / "braces");

  for (const auto& name : catalog_names()) {
    write_text_file(root / "groups" / (file_stem(name) + ".json"),
                    canonical_json(group_to_json(*catalog_group(name))));
  }

  const auto z1 = cyclic_group(1), z5 = cyclic_group(5);
  std::vector<Elem> id5{0, 1, 2, 3, 4};
  write_text_file(root / "operators" / "z5_identity.json",
                  canonical_json(with_group_refs(RelRB(ActionTable::trivial(z5, z5), id5), "z5",
                                                 "z5", "trivial")));
  write_text_file(root / "operators" / "z5_zero.json",
                  canonical_json(with_group_refs(
                      RelRB(ActionTable::trivial(z5, z5), std::vector<Elem>(5, 0)), "z5", "z5",
                      "trivial")));
  for (const char* name : {"D4", "Q8"}) {
    const auto h = catalog_group(name);
    const RelRB r(ActionTable::trivial(z1, h), std::vector<Elem>(h->order(), 0));
    write_text_file(root / "operators" / (file_stem(name) + "_bare.json"),
                    canonical_json(with_group_refs(r, file_stem(name), "z1", "trivial")));
  }

  // S3 = HL with H of order 3, L of order 2, adjoint action, R(hl) = l^-1.
  const auto s3 = catalog_group("S3");
  Elem a = kNoElem, b = kNoElem;
  for (Elem x = 1; x < s3->order(); ++x) {
    if (s3->element_order(x) == 3 && a == kNoElem) a = x;
    if (s3->element_order(x) == 2 && b == kNoElem) b = x;
  }
  std::vector<Elem> r(s3->order());
  for (Elem h : {Elem(0), a, s3->mul(a, a)}) {
    for (Elem l : {Elem(0), b}) r[s3->mul(h, l)] = s3->inv(l);
  }
  write_text_file(root / "operators" / "s3_factorization.json",
                  canonical_json(with_group_refs(RelRB(ActionTable::adjoint(s3), r), "s3", "s3",
                                                 "adjoint")));

  const auto z3 = cyclic_group(3);
  write_text_file(root / "braces" / "trivial_z3.json",
                  canonical_json(brace_to_json(validate_brace(z3, z3))));
  write_text_file(root / "braces" / "s3_factorization.json",
                  canonical_json(brace_to_json(induced_brace(RelRB(ActionTable::adjoint(s3), r)))));
  return 0;
}
