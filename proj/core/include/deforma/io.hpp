#pragma once

#include <map>
#include <string>

#include "deforma/algebra.hpp"
#include "deforma/cohomology.hpp"
#include "deforma/deformation.hpp"
#include "deforma/gauge.hpp"
#include "deforma/linfinity.hpp"

namespace deforma::io {

/// All readers throw SchemaError on malformed input (wrong shapes, unknown
/// schema_version, unparsable rationals) and FileNotFound for missing paths.
/// All writers produce canonical text: object keys sorted, no insignificant
/// whitespace, rationals reduced with "/1" omitted. Reading back a written
/// file reproduces the in-memory value byte-for-byte on rewrite.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

AlgebraStructure parse_algebra(const std::string& text);
std::string write_algebra(const AlgebraStructure& a);
AlgebraStructure read_algebra(const std::string& path);

/// base_dir resolves a relative "algebra" path inside the file.
TruncatedDeformation parse_deformation(const std::string& text, const std::string& base_dir);
std::string write_deformation(const TruncatedDeformation& d);
TruncatedDeformation read_deformation(const std::string& path);

GaugeElement parse_gauge(const std::string& text);
std::string write_gauge(const GaugeElement& x);
GaugeElement read_gauge(const std::string& path);

struct ParsedStructure {
    std::string kind; // "linf" or "ainf"
    GradedSpace space;
    std::map<std::size_t, GradedMultilinearMap> ops;

    LInfinityStructure as_l_infinity() const;
    AInfinityStructure as_a_infinity() const;
};

ParsedStructure parse_structure(const std::string& text);
std::string write_structure(const ParsedStructure& s);
ParsedStructure read_structure(const std::string& path);
ParsedStructure to_parsed(const LInfinityStructure& L);
ParsedStructure to_parsed(const AInfinityStructure& A);

/// Series terms are lists of [index, coefficient] pairs in the degree-1
/// component of the accompanying structure's space.
MCElementSeries parse_series(const std::string& text, const GradedSpace& space);
std::string write_series(const MCElementSeries& s);
MCElementSeries read_series(const std::string& path, const GradedSpace& space);

/// Morphism files carry source and target structures (inline or by path)
/// plus the component maps.
WeakMorphism parse_morphism(const std::string& text, const std::string& base_dir);
WeakMorphism read_morphism(const std::string& path);

std::string write_cohomology_report(const CohomologyReport& r);

} // namespace deforma::io
