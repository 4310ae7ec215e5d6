#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "ingleton/bounds.hpp"
#include "ingleton/distribution.hpp"
#include "ingleton/graphs.hpp"
#include "ingleton/search.hpp"
#include "ingleton/spectral.hpp"
#include "ingleton/splitter.hpp"
#include "ingleton/uniformity.hpp"

namespace ingleton::io {

using Json = nlohmann::json;

/// Deterministic serialization: sorted keys, two-space indent, floats with
/// 17 significant digits, trailing newline.
std::string dump(const Json& j);

/// Errors: ParseError (unreadable file or malformed JSON).
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& j);

Json to_json(const graphs::BiregularBipartiteGraph& g);
/// Errors: ParseError plus the graph validation errors.
graphs::BiregularBipartiteGraph graph_from_json(const Json& j);

Json to_json(const entropy::JointDistribution& d);
entropy::JointDistribution distribution_from_json(const Json& j);

Json to_json(const search::KernelPair& k);
search::KernelPair kernels_from_json(const Json& j);

Json to_json(const spectral::SpectralSummary& s);
Json to_json(const spectral::SpectralSlackReport& a);
Json to_json(const splitter::SplitResult& s);
Json to_json(const entropy::UniformityReport& u);
Json to_json(const bounds::TripleAlternative& t);
Json to_json(const bounds::CertifiedBoundReport& r);
Json to_json(const search::SearchReport& r);

}  // namespace ingleton::io
