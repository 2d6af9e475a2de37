#pragma once

#include <string>
#include <vector>

#include "discoef/instance.hpp"
#include "discoef/john.hpp"
#include "discoef/ratio.hpp"
#include "discoef/search.hpp"
#include "discoef/sphere.hpp"
#include "discoef/sweep.hpp"

// Instance and report documents are UTF-8 JSON; numbers carry up to 17
// significant digits so 64-bit floats round-trip exactly. serialize_instance
// emits a canonical layout: parsing and re-serializing a canonical file is
// byte-identical.

namespace discoef::io {

std::string format_double(double x);

std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
void save_text(const std::string& path, const std::string& content);

std::string serialize_ratio_report(const RatioReport& r);
std::string ratio_report_text(const RatioReport& r);

std::string serialize_john(const JohnResult& j);
std::string john_text(const JohnResult& j);

std::string serialize_sweep(const SweepSummary& s);
std::string sweep_text(const SweepSummary& s);

std::string serialize_search(const SearchResult& s);
std::string search_text(const SearchResult& s);

std::string serialize_baum(const std::vector<BaumRow>& rows);
std::string baum_text(const std::vector<BaumRow>& rows);

}  // namespace discoef::io
