#pragma once

// Token pools behind the synthetic corpus generator. Pools are sized so that
// most values repeat at desk-scale runs, keeping the rarity signal stable.

#include <string_view>
#include <vector>

namespace addrparse::banks {

struct CityEntry {
    std::string_view city;
    std::string_view state;
    std::string_view zip;  // 5-digit base; the last two digits vary
};

struct StreetTypeEntry {
    std::string_view canonical;
    std::string_view short_form;
};

const std::vector<std::string_view>& us_first_names();
const std::vector<std::string_view>& us_last_names();
const std::vector<std::string_view>& us_street_names();
const std::vector<std::string_view>& us_typeless_streets();
const std::vector<StreetTypeEntry>& us_street_types();
const std::vector<CityEntry>& us_cities();
const std::vector<std::string_view>& street_numbers();
const std::vector<std::string_view>& unit_numbers();
const std::vector<std::string_view>& middle_initials();
const std::vector<std::string_view>& titles();
const std::vector<std::string_view>& suffixes();

const std::vector<std::string_view>& pr_first_names();
const std::vector<std::string_view>& pr_last_names();
const std::vector<std::string_view>& pr_street_names();
const std::vector<CityEntry>& pr_cities();

struct MultilingualTemplate {
    std::string_view street_type;   // canonical long form ("Avenida")
    std::string_view street_name;
    std::string_view city;
    std::string_view country;        // canonical ("Brazil")
    std::string_view country_render; // as written ("Brasil")
};

const std::vector<MultilingualTemplate>& multilingual_templates();

struct GermanTemplate {
    std::string_view street;  // compound ("Hauptstrasse")
    std::string_view city;
};

const std::vector<GermanTemplate>& german_templates();

}  // namespace addrparse::banks
