#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowface/fishburn.hpp"
#include "flowface/fvector.hpp"
#include "flowface/laurent.hpp"
#include "flowface/oracle.hpp"

namespace flowface {

enum class Format { plain, json, csv, tex, dot };

Format parse_format(const std::string& name);  // std::invalid_argument on unknown

/// Serialization is deterministic: identical payloads yield identical bytes.
/// JSON numbers are written in full decimal, so arbitrary-precision entries
/// survive unchanged. Unsupported payload/format pairings throw
/// std::invalid_argument.

/// {"-1":1,"0":2,...} fragment for an f-vector keyed by dimension.
std::string fvector_json_object(const FVector& f);

void emit_fvector_row(std::ostream& os, Format format, int n, const FVector& f,
                      const std::string& json_key);

void emit_table(std::ostream& os, Format format,
                std::span<const std::pair<int, FVector>> rows, const std::string& label);

void emit_series(std::ostream& os, Format format, const TruncatedSeries& series,
                 const std::string& which);

void emit_subgraphs_dot(std::ostream& os, std::span<const Subgraph> graphs);

void emit_matrices(std::ostream& os, Format format, int n,
                   std::span<const FishburnMatrix> matrices, bool list);

std::string poly_plain(const LaurentPoly& p);

}  // namespace flowface
