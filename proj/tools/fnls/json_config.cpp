#include "json_config.hpp"

#include "json.hpp"

namespace fnls::cli {
namespace {

using nlohmann::json;

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number()) return value.dump();
  throw CLI::ConversionError("config values must be scalars or arrays of scalars");
}

void flatten(const json& node, const std::string& name, std::vector<std::string> parents,
             std::vector<CLI::ConfigItem>& out) {
  if (node.is_object()) {
    if (!name.empty()) parents.push_back(name);
    for (auto it = node.begin(); it != node.end(); ++it) flatten(*it, it.key(), parents, out);
    return;
  }
  if (name.empty()) throw CLI::ConversionError("the config file must hold a JSON object");
  CLI::ConfigItem item;
  item.name = name;
  item.parents = parents;
  if (node.is_array()) {
    for (const auto& v : node) item.inputs.push_back(scalar_text(v));
  } else {
    item.inputs.push_back(scalar_text(node));
  }
  out.push_back(std::move(item));
}

// Numbers and booleans keep their JSON type; anything else stays a string.
json typed(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (!parsed.is_discarded() && (parsed.is_number() || parsed.is_boolean())) return parsed;
  return text;
}

// CLI11 renders vector defaults as "[a,b,c]".
std::vector<std::string> split_default(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return {text};
  std::vector<std::string> out;
  std::string item;
  for (char c : text.substr(1, text.size() - 2)) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

json describe(const CLI::App* app, bool default_also) {
  json out = json::object();
  for (const CLI::Option* opt : app->get_options()) {
    const std::string name = opt->get_single_name();
    if (opt->get_lnames().empty() || name == "help" || name == "config") continue;
    std::vector<std::string> values = opt->results();
    if (values.empty() && default_also && !opt->get_default_str().empty()) {
      values = split_default(opt->get_default_str());
    }
    if (values.empty()) continue;
    if (values.size() == 1 && opt->get_expected_max() <= 1) {
      out[name] = typed(values.front());
    } else {
      json list = json::array();
      for (const auto& v : values) list.push_back(typed(v));
      out[name] = list;
    }
  }
  for (const CLI::App* sub : app->get_subcommands({})) {
    if (!sub->get_name().empty() && (sub->parsed() || default_also)) {
      json nested = describe(sub, default_also);
      if (!nested.empty()) out[sub->get_name()] = nested;
    }
  }
  return out;
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool,
                                  std::string) const {
  return describe(app, default_also).dump(2) + "\n";
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  json root;
  try {
    input >> root;
  } catch (const json::parse_error& e) {
    throw CLI::ConversionError(std::string("invalid JSON config: ") + e.what());
  }
  std::vector<CLI::ConfigItem> items;
  flatten(root, "", {}, items);
  return items;
}

}  // namespace fnls::cli
