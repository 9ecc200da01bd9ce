#pragma once

// The concrete groups, embeddings, extensions and representations studied
// here.  W denotes (Z4 x Z4) ⋊ Z2 with t swapping the factors.

#include "herbert/representation.hpp"

namespace herbert::catalog {

inline IntMatrix quarter_turn() { return IntMatrix{{0, -1}, {1, 0}}; }
inline IntMatrix flip() { return IntMatrix{{0, 1}, {1, 0}}; }

inline GroupPtr z4() {
  static const GroupPtr g = build_group("Z4");
  return g;
}
inline GroupPtr z2() {
  static const GroupPtr g = build_group("Z2");
  return g;
}
inline GroupPtr q8() {
  static const GroupPtr g = build_group("Q8");
  return g;
}
inline GroupPtr z4xz2() {
  static const GroupPtr g = build_group("Z4xZ2");
  return g;
}
inline GroupPtr z4xz4() {
  static const GroupPtr g = build_group("Z4xZ4");
  return g;
}
inline GroupPtr w() {
  static const GroupPtr g = build_group("Z4xZ4_sd_Z2");
  return g;
}

/// Element ((x,y),s) of W.
inline Element w_elem(int x, int y, int s) {
  auto m = [](int v) { return static_cast<Element>(((v % 4) + 4) % 4); };
  return 2 * (m(x) * 4 + m(y)) + static_cast<Element>(s & 1);
}

/// The Z-generator inverts b: b -> b^3.
inline const ZExtension& z4_ext() {
  static const ZExtension e(inversion_aut(z4()), "Z4⋊Z");
  return e;
}
inline const ZExtension& z4xz4_ext() {
  static const ZExtension e(inversion_aut(z4xz4()), "(Z4xZ4)⋊Z");
  return e;
}

/// On W the Z-generator inverts both coordinates and fixes t.
inline GroupAut w_theta() {
  const auto& W = w();
  std::vector<Element> im(W->order());
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int s = 0; s < 2; ++s) im[w_elem(x, y, s)] = w_elem(-x, -y, s);
  return GroupAut(GroupHom(W, W, std::move(im), "theta"));
}
inline const ZExtension& w_ext() {
  static const ZExtension e(w_theta(), "((Z4xZ4)⋊Z2)⋊Z");
  return e;
}

/// Z4 x Z4 as the index-2 subgroup of W.
inline const GroupHom& z4xz4_in_w() {
  static const GroupHom h = [] {
    std::vector<Element> im(16);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) im[z4xz4()->element("(" + std::to_string(x) + "," + std::to_string(y) + ")")] =
          w_elem(x, y, 0);
    return GroupHom(z4xz4(), w(), std::move(im), "Z4xZ4->W");
  }();
  return h;
}

/// i -> ((1,-1),0), j -> ((1,1),1); then k = ij -> ((2,0),1).
inline const GroupHom& q8_in_w() {
  static const GroupHom h = make_hom(q8(), w(), std::vector<Element>{w_elem(1, -1, 0), w_elem(1, 1, 1)}, "Q8->W");
  return h;
}

/// b -> ((1,1),0), t -> ((0,0),1).
inline const GroupHom& z4xz2_in_w() {
  static const GroupHom h = make_hom(z4xz2(), w(), std::vector<Element>{w_elem(1, 1, 0), w_elem(0, 0, 1)}, "Z4xZ2->W");
  return h;
}

/// <i> in Q8, identified with Z4 by b -> i.
inline const GroupHom& z4_in_q8() {
  static const GroupHom h = make_hom(z4(), q8(), std::vector<Element>{q8()->element("i")}, "Z4->Q8");
  return h;
}

/// Diagonal Z4 in Z4 x Z2 (b -> (1,0)), the fiber of the diagonal cover.
inline const GroupHom& z4_in_z4xz2() {
  static const GroupHom h = make_hom(z4(), z4xz2(), std::vector<Element>{z4xz2()->element("(1,0)")}, "Z4->Z4xZ2");
  return h;
}

/// Z4 x Z2 -> Z4 forgetting t.
inline const GroupHom& z4xz2_to_z4() {
  static const GroupHom h = make_hom(z4xz2(), z4(), std::vector<Element>{1, 0}, "s");
  return h;
}

/// Z4 -> Z4 x Z4, b -> (1,-1): <i> followed by Q8 -> W lands here.
inline const GroupHom& z4_antidiagonal() {
  static const GroupHom h = make_hom(z4(), z4xz4(), std::vector<Element>{z4xz4()->element("(1,3)")}, "antidiag");
  return h;
}
/// Z4 -> Z4 x Z4, b -> (1,1).
inline const GroupHom& z4_diagonal() {
  static const GroupHom h = make_hom(z4(), z4xz4(), std::vector<Element>{z4xz4()->element("(1,1)")}, "diag");
  return h;
}
/// Z4 x Z4 -> Z4 onto the first coordinate.
inline const GroupHom& first_projection() {
  static const GroupHom h = make_hom(z4xz4(), z4(), std::vector<Element>{1, 0}, "pr1");
  return h;
}
/// Swap of the coordinates of Z4 x Z4, i.e. conjugation by t.
inline GroupAut swap_aut() { return restrict_aut(conjugation_aut(w(), w_elem(0, 0, 1)), z4xz4_in_w()); }

inline const ZExtension& z4xz2_ext() {
  static const ZExtension e = restrict_extension(w_ext(), z4xz2_in_w(), "(Z4xZ2)⋊Z");
  return e;
}

// ---------------------------------------------------------------------------
// Representations

inline MatrixRep rep_a() {
  MatrixRep r;
  r.name = "A";
  r.group = z4();
  r.extension = z4_ext();
  r.generator_images = {quarter_turn()};
  r.z_image = flip();
  return r;
}

inline MatrixRep rep_a2() {
  MatrixRep r;
  r.name = "A[2]";
  r.group = w();
  r.extension = w_ext();
  r.generator_images = {
      IntMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
      IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
  };
  r.z_image = IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  return r;
}

/// The displayed images of i, j, k; k is checked against i*j.
inline std::vector<IntMatrix> q8_matrices() {
  return {
      IntMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}},
      IntMatrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}},
      IntMatrix{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
  };
}
inline MatrixRep rep_q8() {
  MatrixRep r;
  r.name = "Q8 in O(4)";
  r.group = q8();
  auto m = q8_matrices();
  r.generator_images = {m[0], m[1]};
  return r;
}

inline MatrixRep rep_z4xz2() {
  MatrixRep r;
  r.name = "Z4xZ2 in O(4)";
  r.group = z4xz2();
  r.generator_images = {
      IntMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
      IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
  };
  return r;
}

}  // namespace herbert::catalog
