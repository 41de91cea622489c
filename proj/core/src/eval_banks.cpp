#include "eval_banks.hpp"

namespace addrparse::banks {

namespace {
template <typename T>
std::vector<T> make(std::initializer_list<T> items) {
    return std::vector<T>(items);
}
}  // namespace

const std::vector<std::string_view>& us_first_names() {
    static const auto v = make<std::string_view>({
        "James",   "Mary",     "John",    "Patricia", "Robert",  "Jennifer",
        "Michael", "Linda",    "David",   "Elizabeth", "William", "Barbara",
        "Richard", "Susan",    "Joseph",  "Jessica",  "Thomas",  "Karen",
        "Charles", "Sarah",    "Daniel",  "Lisa",     "Matthew", "Nancy",
        "Anthony", "Sandra",   "Mark",    "Ashley",   "Donald",  "Emily",
        "Steven",  "Kimberly", "Andrew",  "Margaret", "Paul",    "Donna",
        "Joshua",  "Michelle", "Kenneth", "Carol",    "Kevin",   "Amanda",
        "Brian",   "Melissa",  "George",  "Deborah",  "Edward",  "Stephanie",
    });
    return v;
}

const std::vector<std::string_view>& us_last_names() {
    static const auto v = make<std::string_view>({
        "Smith",    "Johnson",  "Williams", "Brown",    "Jones",    "Garcia",
        "Miller",   "Davis",    "Rodriguez", "Martinez", "Hernandez", "Lopez",
        "Gonzalez", "Wilson",   "Anderson", "Thomas",   "Taylor",   "Moore",
        "Jackson",  "Martin",   "Lee",      "Perez",    "Thompson", "White",
        "Harris",   "Sanchez",  "Clark",    "Ramirez",  "Lewis",    "Robinson",
        "Walker",   "Young",    "Allen",    "King",     "Wright",   "Scott",
        "Torres",   "Nguyen",   "Hill",     "Flores",   "Green",    "Adams",
        "Nelson",   "Baker",    "Hall",     "Rivera",   "Campbell", "Mitchell",
        "Carter",   "Roberts",  "Gomez",    "Phillips", "Evans",    "Turner",
        "Diaz",     "Parker",   "Cruz",     "Edwards",  "Collins",  "Reyes",
        "Stewart",  "Morris",   "Morales",  "Murphy",
    });
    return v;
}

const std::vector<std::string_view>& us_street_names() {
    static const auto v = make<std::string_view>({
        "Oak",       "Maple",     "Cedar",    "Elm",       "Pine",
        "Walnut",    "Washington", "Lincoln",  "Jefferson", "Madison",
        "Franklin",  "Highland",  "Sunset",   "Lakeview",  "Riverside",
        "Meadow",    "Hillcrest", "Spring",   "Willow",    "Chestnut",
        "Sycamore",  "Magnolia",  "Dogwood",  "Juniper",   "Aspen",
        "Birch",     "Locust",    "Poplar",   "Cherry",    "Hickory",
        "Main",      "Church",    "Mill",     "Prospect",  "Grove",
        "Laurel",    "Garden",    "Orchard",  "Martin Luther King",
        "Van Buren",
    });
    return v;
}

const std::vector<std::string_view>& us_typeless_streets() {
    static const auto v = make<std::string_view>({"Broadway"});
    return v;
}

const std::vector<StreetTypeEntry>& us_street_types() {
    static const std::vector<StreetTypeEntry> v = {
        {"Street", "St"},   {"Avenue", "Ave"},   {"Boulevard", "Blvd"},
        {"Drive", "Dr"},    {"Road", "Rd"},      {"Lane", "Ln"},
        {"Court", "Ct"},    {"Place", "Pl"},     {"Terrace", "Ter"},
        {"Parkway", "Pkwy"},
    };
    return v;
}

const std::vector<CityEntry>& us_cities() {
    static const std::vector<CityEntry> v = {
        {"Phoenix", "AZ", "85004"},    {"Springfield", "IL", "62704"},
        {"Cambridge", "MA", "02139"},  {"Austin", "TX", "78701"},
        {"Denver", "CO", "80202"},     {"Seattle", "WA", "98101"},
        {"Portland", "OR", "97201"},   {"Atlanta", "GA", "30303"},
        {"Boston", "MA", "02108"},     {"Chicago", "IL", "60601"},
        {"Nashville", "TN", "37201"},  {"Columbus", "OH", "43215"},
        {"Madison", "WI", "53703"},    {"Omaha", "NE", "68102"},
        {"Tucson", "AZ", "85701"},     {"Raleigh", "NC", "27601"},
        {"Richmond", "VA", "23219"},   {"Tampa", "FL", "33602"},
        {"Fresno", "CA", "93701"},     {"Salem", "OR", "97301"},
        {"Boise", "ID", "83702"},      {"Helena", "MT", "59601"},
        {"Wichita", "KS", "67202"},    {"El Paso", "TX", "79901"},
    };
    return v;
}

const std::vector<std::string_view>& street_numbers() {
    static const auto v = make<std::string_view>({
        "12",      "19",      "27",     "33",      "42",      "58",
        "77",      "89",      "104",    "123",     "150",     "212",
        "256",     "301",     "345",    "408",     "417",     "523",
        "610",     "742",     "815",    "900",     "1024",    "1127",
        "1350",    "1428",    "1515",   "1620",    "1776",    "1845",
        "1900",    "2048",    "2210",   "2455",    "2600",    "2718",
        "2900",    "3141",    "3300",   "3505",    "3700",    "3926",
        "4100",    "4375",    "4550",   "4800",    "5025",    "5280",
        "5500",    "5775",    "6000",   "6250",    "6500",    "6789",
        "7000",    "123-1/2", "45-1/2", "208-1/2", "77-1/2",  "1600-1/2",
    });
    return v;
}

const std::vector<std::string_view>& unit_numbers() {
    static const auto v = make<std::string_view>({
        "2",  "4B", "5",   "7",   "9",   "12",  "14C", "18", "21", "23A",
        "30", "34", "101", "204", "301", "B2",  "C7",  "8",  "16", "11",
    });
    return v;
}

const std::vector<std::string_view>& middle_initials() {
    static const auto v = make<std::string_view>({
        "A.", "B.", "C.", "D.", "E.", "F.", "G.", "H.", "J.", "K.",
        "L.", "M.", "N.", "P.", "R.", "S.", "T.", "W.",
    });
    return v;
}

const std::vector<std::string_view>& titles() {
    static const auto v = make<std::string_view>({"Mr.", "Mrs.", "Ms.", "Dr."});
    return v;
}

const std::vector<std::string_view>& suffixes() {
    static const auto v = make<std::string_view>({"Jr.", "Sr.", "III", "PhD"});
    return v;
}

const std::vector<std::string_view>& pr_first_names() {
    static const auto v = make<std::string_view>({
        "José",   "María",  "Carlos", "Ana",    "Luis",   "Carmen",
        "Miguel", "Rosa",   "Pedro",  "Isabel", "Rafael", "Elena",
        "Jorge",  "Lucía",  "Manuel", "Sofía",
    });
    return v;
}

const std::vector<std::string_view>& pr_last_names() {
    static const auto v = make<std::string_view>({
        "Rivera",    "Colón",    "Ortiz",  "Torres",  "Santiago", "Vázquez",
        "Pérez",     "Rodríguez", "Martínez", "Díaz",  "Morales",  "Ramos",
    });
    return v;
}

const std::vector<std::string_view>& pr_street_names() {
    static const auto v = make<std::string_view>({
        "Sol", "Luna", "Palma", "Estrella", "Azucena", "Orquídea", "Gardenia",
        "Amapola",
    });
    return v;
}

const std::vector<CityEntry>& pr_cities() {
    static const std::vector<CityEntry> v = {
        {"San Juan", "PR", "00901"}, {"Ponce", "PR", "00716"},
        {"Bayamón", "PR", "00956"},  {"Caguas", "PR", "00725"},
        {"Mayagüez", "PR", "00680"}, {"Arecibo", "PR", "00612"},
    };
    return v;
}

const std::vector<MultilingualTemplate>& multilingual_templates() {
    static const std::vector<MultilingualTemplate> v = {
        {"Avenida", "Paulista", "São Paulo", "Brazil", "Brasil"},
        {"Rua", "Augusta", "São Paulo", "Brazil", "Brazil"},
        {"Avenida", "Atlântica", "Rio de Janeiro", "Brazil", "Brasil"},
        {"Calle", "Mayor", "Madrid", "Spain", "Spain"},
        {"Calle", "Serrano", "Madrid", "Spain", "España"},
        {"Avenida", "Juárez", "Ciudad de México", "Mexico", "Mexico"},
        {"Paseo", "Bolívar", "Ciudad de México", "Mexico", "México"},
        {"Rue", "Lafayette", "Paris", "France", "France"},
        {"Rua", "Garrett", "Lisboa", "Portugal", "Portugal"},
    };
    return v;
}

const std::vector<GermanTemplate>& german_templates() {
    static const std::vector<GermanTemplate> v = {
        {"Hauptstrasse", "Berlin"},
        {"Gartenweg", "München"},
        {"Schulstrasse", "Hamburg"},
    };
    return v;
}

}  // namespace addrparse::banks
