#include <algorithm>

#include "dckron/errors.hpp"
#include "dckron/network.hpp"

namespace dckron {
namespace {

// All builtin feeders use unit susceptances.

constexpr const char* kIeee3 = R"(net ieee3
vertex 1 source gen
vertex 2 interior
vertex 3 sink load
edge 1 2 b=1
edge 1 3 b=1
edge 2 3 b=1
)";

constexpr const char* kIeee5 = R"(net ieee5
vertex 1 source gen
vertex 2 interior
vertex 3 interior
vertex 4 interior
vertex 5 sink load
edge 1 2 b=1
edge 1 3 b=1
edge 2 3 b=1
edge 2 4 b=1
edge 2 5 b=1
edge 3 4 b=1
edge 4 5 b=1
)";

constexpr const char* kIeee9 = R"(net ieee9
vertex 1 source gen
vertex 2 source gen
vertex 3 source gen
vertex 4 interior
vertex 5 sink load
vertex 6 sink load
vertex 7 interior
vertex 8 sink load
vertex 9 interior
edge 1 4 b=1
edge 2 7 b=1
edge 3 9 b=1
edge 4 5 b=1
edge 4 6 b=1
edge 7 5 b=1
edge 7 8 b=1
edge 9 6 b=1
edge 9 8 b=1
)";

// Standard 20-line IEEE 14-bus topology. Buses 1 and 8 feed the network,
// bus 13 is the only sink; every line points from the higher to the lower
// angle of the reference operating point.
constexpr const char* kIeee14 = R"(net ieee14
vertex 1 source gen
vertex 2 interior
vertex 3 interior
vertex 4 interior
vertex 5 interior
vertex 6 interior
vertex 7 interior
vertex 8 source gen
vertex 9 interior
vertex 10 interior
vertex 11 interior
vertex 12 interior
vertex 13 sink load
vertex 14 interior
edge 1 2 b=1
edge 1 5 b=1
edge 2 3 b=1
edge 2 4 b=1
edge 2 5 b=1
edge 3 4 b=1
edge 5 4 b=1
edge 7 4 b=1
edge 4 9 b=1
edge 5 6 b=1
edge 6 11 b=1
edge 6 12 b=1
edge 6 13 b=1
edge 8 7 b=1
edge 7 9 b=1
edge 10 9 b=1
edge 9 14 b=1
edge 11 10 b=1
edge 12 13 b=1
edge 14 13 b=1
)";

// 24-bus RTS area template (401-424, double circuits merged) with tie buses
// 303, 315 and 317 of Area 3. Regenerate with tools/data/gen_rts96_area4.py.
constexpr const char* kRts96Area4 = R"(net rts96-area4
vertex 401 interior gen load
vertex 402 interior gen load
vertex 403 interior load
vertex 404 sink load
vertex 405 sink load
vertex 406 sink load
vertex 407 source gen load
vertex 408 sink load
vertex 409 interior load
vertex 410 interior load
vertex 411 interior
vertex 412 interior
vertex 413 interior gen load
vertex 414 interior load
vertex 415 interior gen load
vertex 416 interior gen load
vertex 417 interior
vertex 418 interior gen load
vertex 419 sink load
vertex 420 interior load
vertex 421 interior gen
vertex 422 source gen
vertex 423 source gen
vertex 424 interior
vertex 303 sink pin
vertex 315 source pin
vertex 317 sink pin
edge 401 402 b=1
edge 403 401 b=1
edge 401 405 b=1
edge 402 404 b=1
edge 402 406 b=1
edge 409 403 b=1
edge 424 403 b=1
edge 409 404 b=1
edge 410 405 b=1
edge 410 406 b=1
edge 407 408 b=1
edge 409 408 b=1
edge 410 408 b=1
edge 411 409 b=1
edge 412 409 b=1
edge 411 410 b=1
edge 412 410 b=1
edge 413 411 b=1
edge 414 411 b=1
edge 413 412 b=1
edge 423 412 b=1
edge 423 413 b=1
edge 416 414 b=1
edge 415 416 b=1
edge 421 415 b=1
edge 415 424 b=1
edge 417 416 b=1
edge 416 419 b=1
edge 418 417 b=1
edge 422 417 b=1
edge 421 418 b=1
edge 420 419 b=1
edge 423 420 b=1
edge 422 421 b=1
edge 407 303 b=1
edge 315 413 b=1
edge 423 317 b=1
)";

struct Case {
  const char* name;
  const char* text;
};

constexpr Case kCases[] = {
    {"ieee3", kIeee3}, {"ieee5", kIeee5}, {"ieee9", kIeee9}, {"ieee14", kIeee14}, {"rts96-area4", kRts96Area4},
};

}  // namespace

const std::vector<std::string>& builtin_case_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kCases) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

Network builtin_case(std::string_view name) {
  for (const auto& c : kCases) {
    if (name == c.name) return parse_network(c.text).network;
  }
  throw ValidationError("unknown builtin case '" + std::string(name) + "'");
}

}  // namespace dckron
