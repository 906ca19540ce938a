#pragma once

#include "foldprod/ot2.hpp"
#include "foldprod/verify.hpp"

#include <json.hpp>

#include <string>

namespace foldprod {

/// Reports use insertion-ordered JSON so identical inputs give identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// FNV-1a of the raw input bytes, hex-encoded.
std::string input_digest(const std::string& bytes);

/// Polynomial as a list of [[exponents], "num/den"] term pairs, in storage order.
Json poly_to_json(const Polynomial& p);
Json betti_to_json(const BettiTable& b);
Json arrangement_to_json(const Arrangement& A);
Json flats_to_json(const std::vector<Flat2>& flats);
Json circuits_to_json(const std::vector<Circuit3>& circuits);
Json singular_points_to_json(const std::vector<SingularPoint>& pts);

/// Shared wrapper: {"schema": 1, "command": ..., "input_digest": ...}.
Json report_header(const std::string& command, const std::string& digest);

} // namespace foldprod
