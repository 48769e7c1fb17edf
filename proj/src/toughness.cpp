#include "tough/toughness.hpp"

#include "tough/errors.hpp"

namespace tough {

namespace {

int count_components(const Graph& g, VertexSet removed) {
  int count = 0;
  VertexSet todo = full_set(g.order()) & ~removed;
  while (todo) {
    VertexSet comp = todo & (-todo);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1)
        next |= g.neighbor_bits(__builtin_ctzll(f));
      frontier = next & todo & ~comp;
      comp |= frontier;
    }
    todo &= ~comp;
    ++count;
  }
  return count;
}

/// Next subset of the same popcount in ascending numeric order, or 0 when
/// exhausted within the first n bits.
VertexSet next_subset(VertexSet v, int n) {
  const VertexSet u = v & (~v + 1);
  const VertexSet w = v + u;
  if (w == 0 || w > full_set(n)) return 0;
  return w | (((v ^ w) / u) >> 2);
}

void check_preconditions(const Graph& g) {
  if (!g.fits_word())
    throw PreconditionError("toughness search requires order <= 64");
  if (structural_flags(g).complete)
    throw PreconditionError("toughness is undefined for complete graphs");
}

}  // namespace

ToughnessResult toughness_exact(const Graph& g) {
  check_preconditions(g);
  const int n = g.order();
  {
    const int c0 = count_components(g, 0);
    if (c0 >= 2) return {Rational(0), 0, c0, true};
  }

  ToughnessResult best;
  bool found = false;
  for (int s = 1; s <= n - 2; ++s) {
    // A size-s cut leaves at most n-s components, so s/(n-s) lower-bounds
    // every ratio at this size and beyond.
    if (found && Rational(s, n - s) >= best.value) break;
    for (VertexSet cut = full_set(s); cut != 0; cut = next_subset(cut, n)) {
      const int c = count_components(g, cut);
      if (c < 2) continue;
      const Rational ratio(s, c);
      if (!found || ratio < best.value) {
        best = {ratio, cut, c, false};
        found = true;
      }
    }
  }
  // A non-complete connected graph always has a proper cut.
  if (!found)
    throw PreconditionError("no cut found; graph appears complete");
  return best;
}

bool is_t_tough(const Graph& g, const Rational& t) {
  check_preconditions(g);
  const int n = g.order();
  if (count_components(g, 0) >= 2) return t <= Rational(0);
  for (int s = 1; s <= n - 2; ++s) {
    if (Rational(s, n - s) >= t) break;
    for (VertexSet cut = full_set(s); cut != 0; cut = next_subset(cut, n)) {
      const int c = count_components(g, cut);
      if (c >= 2 && Rational(s, c) < t) return false;
    }
  }
  return true;
}

}  // namespace tough
