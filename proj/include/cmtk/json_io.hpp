#ifndef CMTK_JSON_IO_HPP
#define CMTK_JSON_IO_HPP

#include "cmtk/certify.hpp"
#include "cmtk/cmcat.hpp"
#include "cmtk/heegner.hpp"
#include "cmtk/splitcount.hpp"
#include "cmtk/treeiso.hpp"

#include <json.hpp>

namespace cmtk {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "cmtk-1";

// Integers and rationals are strings so that no reader truncates them.
Json to_json(const Int& v);
Json to_json(const Rational& v);
Json to_json(const Poly& p);
Json to_json(const PrimePoly& p);
Json to_json(const Factorization& f);
Json to_json(const ImagQuadField& K);
Json to_json(const FormClass& x);
Json to_json(const ClassNumberAudit& a);
Json to_json(const ClassGroup& g, bool with_reps);
Json to_json(const CatalogueRow& row, std::size_t id);
Json to_json(const Catalogue& c);
Json to_json(const GaloisOrbit& o);
Json to_json(const Median& m);
Json to_json(const HeckeCosetRep& r);
Json to_json(const CoveringOrders& c);
Json to_json(const DegreeBounds& b);
Json to_json(const SpecialTriple& t);
Json split_audit(const SplittingSpec& spec, int t, const Int& exact);
Json to_json(const Inequality& e);
Json to_json(const Certificate& c);
Json to_json(const HeightBound& b);
Json to_json(const Ladder& l);
Json to_json(const HeegnerField& f);
Json to_json(const HeegnerSearch& s);
Json to_json(const TowerLevel& l);

/// Polynomial record back to a Poly.
Poly poly_from_json(const Json& j);

}  // namespace cmtk

#endif  // CMTK_JSON_IO_HPP
