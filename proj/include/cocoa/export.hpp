// Serialization: JSON dumps, Graphviz DOT and HOA for the co-Büchi levels.
#pragma once

#include <string>

#include <json.hpp>

#include "cocoa/chain.hpp"

namespace cocoa {

nlohmann::json label_to_json(const Label& l);
nlohmann::json sltm_to_json(const Sltm& m);
nlohmann::json dfw_to_json(const Dfw& d);
nlohmann::json ncw_to_json(const HdNcw& c);
HdNcw ncw_from_json(const nlohmann::json& j);
nlohmann::json chain_to_json(const Cocoa& chain);

std::string awa_to_dot(const Awa& a);
std::string obligation_to_dot(const ObligationGraph& g, const Awa& a);
std::string sltm_to_dot(const Sltm& m);
std::string dfw_to_dot(const Dfw& d, const Sltm& m, const std::string& name);
/// SLTM and every level DFW as clusters of one graph.
std::string chain_to_dot(const Cocoa& chain);

/// Transition-based co-Büchi HOA; rejecting transitions carry set 0.
std::string ncw_to_hoa(const HdNcw& c, const std::string& name);
/// Reads what ncw_to_hoa writes.  Throws ParseError.
HdNcw ncw_from_hoa(const std::string& text);

}  // namespace cocoa
