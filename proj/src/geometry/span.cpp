#include "internal.hpp"
#include "tangentia/error.hpp"

namespace tangentia {

std::string to_string(SpanKind kind) {
  switch (kind) {
    case SpanKind::Scheme: return "scheme";
    case SpanKind::Reduced: return "reduced";
    case SpanKind::Tangents: return "tangents";
  }
  return "?";
}

namespace {

SpanResult from_forms(SpanKind kind, std::size_t ambient, std::vector<Polynomial> forms) {
  SpanResult out{kind, std::move(forms), 0, {}};
  out.proj_dim = static_cast<long>(ambient) - static_cast<long>(out.linear_forms.size());
  return out;
}

SpanResult empty_span(SpanKind kind, const Ring& ring) {
  SpanResult out{kind, detail::degree_one_part(Ideal::unit(ring)), -1, {}};
  return out;
}

std::vector<Point> tangent_support(const ProjScheme& Z, const std::vector<Point>& given) {
  if (!given.empty()) {
    for (const auto& p : given) {
      if (p.size() != Z.ring()->size()) throw InputError("support point has the wrong number of coordinates");
      for (const auto& g : Z.ideal().generators())
        if (g.eval(p) != 0) throw InputError("support point does not lie on the scheme");
    }
    return given;
  }
  const PointSet pts = rational_points(Z);
  if (!pts.complete)
    throw UnsupportedError("tangent span: support has irrational points; supply them or use a numeric method");
  return pts.points;
}

// Forms vanishing on all the given vectors.
std::vector<Polynomial> annihilator(const Ring& ring, const RationalMatrix& vectors) {
  if (vectors.rows() == 0) return detail::degree_one_part(Ideal::unit(ring));
  const RationalMatrix ann = nullspace(vectors);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < ann.rows(); ++r) rows.push_back(ann.row(r));
  return detail::linear_basis(ring, rows);
}

ProjScheme reduced_of(const ProjScheme& Z) {
  if (Z.dim() > 0) throw UnsupportedError("reduced span needs a finite scheme");
  return ProjScheme::make(radical_zero_dim(Z.ideal()));
}

}  // namespace

SpanResult linear_span(const ProjScheme& Z, SpanKind kind, const std::vector<Point>& support) {
  const Ring& ring = Z.ring();
  const std::size_t N = Z.ambient_dim();
  if (Z.is_empty()) return empty_span(kind, ring);
  switch (kind) {
    case SpanKind::Scheme: return from_forms(kind, N, detail::degree_one_part(Z.ideal()));
    case SpanKind::Reduced: return from_forms(kind, N, detail::degree_one_part(reduced_of(Z).ideal()));
    case SpanKind::Tangents: break;
  }
  const auto points = tangent_support(Z, support);
  RationalMatrix stacked(0, ring->size());
  for (const auto& p : points) {
    const RationalMatrix T = zariski_tangent_space(Z.ideal(), p);
    for (std::size_t r = 0; r < T.rows(); ++r) stacked.append_row(T.row(r));
  }
  SpanResult out = from_forms(kind, N, annihilator(ring, stacked));
  out.support = points;
  return out;
}

SpanResult linear_span(const VeroneseSubscheme& Z, SpanKind kind, const std::vector<Point>& support) {
  const VeroneseEmbedding& v = *Z.embedding;
  const std::size_t N = v.ambient_dim();
  const ProjScheme source = ProjScheme::make(Z.source_ideal);
  if (source.is_empty()) return empty_span(kind, v.target);
  auto pushed = [&](const ProjScheme& S) {
    const GradedPiece piece = graded_piece_basis(v.source, S.ideal().groebner_basis(), v.d);
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : piece.basis) rows.push_back(detail::linear_coefficients(v.pushforward(f)));
    return from_forms(kind, N, detail::linear_basis(v.target, rows));
  };
  switch (kind) {
    case SpanKind::Scheme: return pushed(source);
    case SpanKind::Reduced: return pushed(reduced_of(source));
    case SpanKind::Tangents: break;
  }
  const auto points = tangent_support(source, support);
  RationalMatrix stacked(0, N + 1);
  for (const auto& p : points) {
    const RationalMatrix T = zariski_tangent_space(source.ideal(), p);
    stacked.append_row(v.map_point(p));
    for (std::size_t r = 0; r < T.rows(); ++r) stacked.append_row(v.differential(p, T.row(r)));
  }
  SpanResult out = from_forms(kind, N, annihilator(v.target, stacked));
  out.support = points;
  return out;
}

}  // namespace tangentia
