// Copyright 2026 The coocnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coocnet/gexf.h"

#include <algorithm>
#include <map>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "coocnet/error.h"
#include "coocnet/text_util.h"

namespace coocnet {
namespace {

namespace pt = boost::property_tree;

constexpr std::string_view kCommunityAttr = "0";
constexpr std::string_view kBetweennessAttr = "1";
constexpr std::string_view kDegreeAttr = "2";
constexpr std::string_view kTypeAttr = "3";
constexpr std::string_view kMentionsAttr = "4";

std::string Escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view LocalName(std::string_view key) {
  size_t colon = key.find(':');
  return colon == std::string_view::npos ? key : key.substr(colon + 1);
}

const pt::ptree *Child(const pt::ptree &tree, std::string_view local) {
  for (const auto &[key, child] : tree) {
    if (key != "<xmlattr>" && LocalName(key) == local) return &child;
  }
  return nullptr;
}

std::string Attr(const pt::ptree &tree, const std::string &name,
                 std::string_view element) {
  auto value = tree.get_optional<std::string>("<xmlattr>." + name);
  if (!value) {
    throw Error("GEXF: <" + std::string(element) + "> lacks attribute '" +
                name + "'");
  }
  return *value;
}

}  // namespace

const std::array<Rgb, 12> &CommunityPalette() {
  static const std::array<Rgb, 12> palette = {{
      {31, 119, 180},
      {255, 127, 14},
      {44, 160, 44},
      {214, 39, 40},
      {148, 103, 189},
      {140, 86, 75},
      {227, 119, 194},
      {127, 127, 127},
      {188, 189, 34},
      {23, 190, 207},
      {174, 199, 232},
      {255, 187, 120},
  }};
  return palette;
}

std::vector<double> NodeSizes(const std::vector<double> &betweenness) {
  std::vector<double> sizes(betweenness.size(), kMinNodeSize);
  if (betweenness.empty()) return sizes;
  auto [lo, hi] = std::minmax_element(betweenness.begin(), betweenness.end());
  const double range = *hi - *lo;
  if (!(range > 0)) return sizes;
  for (size_t i = 0; i < sizes.size(); ++i) {
    sizes[i] = kMinNodeSize +
               (kMaxNodeSize - kMinNodeSize) * (betweenness[i] - *lo) / range;
  }
  return sizes;
}

std::string ExportGexf(const CoocGraph &g, const Partition &p,
                       const std::vector<double> &betweenness,
                       const Layout &layout) {
  const int n = g.NodeCount();
  if (static_cast<int>(p.community.size()) != n ||
      static_cast<int>(betweenness.size()) != n ||
      static_cast<int>(layout.positions.size()) != n) {
    throw Error("GEXF export: attributes do not cover the graph");
  }
  const std::vector<double> sizes = NodeSizes(betweenness);
  const auto &palette = CommunityPalette();

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://www.gexf.net/1.2draft\""
      << " xmlns:viz=\"http://www.gexf.net/1.2draft/viz\""
      << " xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\""
      << " xsi:schemaLocation=\"http://www.gexf.net/1.2draft"
      << " http://www.gexf.net/1.2draft/gexf.xsd\" version=\"1.2\">\n"
      << "  <meta>\n"
      << "    <creator>coocnet</creator>\n"
      << "    <description>Entity co-occurrence network</description>\n"
      << "  </meta>\n"
      << "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n"
      << "    <attributes class=\"node\" mode=\"static\">\n"
      << "      <attribute id=\"" << kCommunityAttr
      << "\" title=\"community\" type=\"integer\"/>\n"
      << "      <attribute id=\"" << kBetweennessAttr
      << "\" title=\"betweenness\" type=\"double\"/>\n"
      << "      <attribute id=\"" << kDegreeAttr
      << "\" title=\"degree\" type=\"integer\"/>\n"
      << "      <attribute id=\"" << kTypeAttr
      << "\" title=\"type\" type=\"string\"/>\n"
      << "      <attribute id=\"" << kMentionsAttr
      << "\" title=\"mentions\" type=\"long\"/>\n"
      << "    </attributes>\n"
      << "    <nodes>\n";
  for (const GraphNode &node : g.nodes()) {
    const int id = node.id;
    const Rgb color = palette[p.community[id] % palette.size()];
    out << "      <node id=\"" << id << "\" label=\"" << Escape(node.label)
        << "\">\n"
        << "        <attvalues>\n"
        << "          <attvalue for=\"" << kCommunityAttr << "\" value=\""
        << p.community[id] << "\"/>\n"
        << "          <attvalue for=\"" << kBetweennessAttr << "\" value=\""
        << FormatDouble(betweenness[id]) << "\"/>\n"
        << "          <attvalue for=\"" << kDegreeAttr << "\" value=\""
        << g.Degree(id) << "\"/>\n"
        << "          <attvalue for=\"" << kTypeAttr << "\" value=\""
        << EntityTypeName(node.etype) << "\"/>\n"
        << "          <attvalue for=\"" << kMentionsAttr << "\" value=\""
        << node.mentions << "\"/>\n"
        << "        </attvalues>\n"
        << "        <viz:color r=\"" << int{color.r} << "\" g=\"" << int{color.g}
        << "\" b=\"" << int{color.b} << "\"/>\n"
        << "        <viz:position x=\"" << FormatDouble(layout.positions[id].x)
        << "\" y=\"" << FormatDouble(layout.positions[id].y)
        << "\" z=\"0\"/>\n"
        << "        <viz:size value=\"" << FormatDouble(sizes[id]) << "\"/>\n"
        << "      </node>\n";
  }
  out << "    </nodes>\n"
      << "    <edges>\n";
  int edge_id = 0;
  for (const GraphEdge &e : g.Edges()) {
    out << "      <edge id=\"" << edge_id++ << "\" source=\"" << e.source
        << "\" target=\"" << e.target << "\" weight=\"" << e.weight
        << "\"/>\n";
  }
  out << "    </edges>\n"
      << "  </graph>\n"
      << "</gexf>\n";
  return out.str();
}

GexfDocument ReadGexf(std::string_view xml) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error &e) {
    throw Error("GEXF: " + std::string(e.what()));
  }
  const pt::ptree *root = Child(tree, "gexf");
  if (root == nullptr) throw Error("GEXF: missing <gexf> root");
  const pt::ptree *graph = Child(*root, "graph");
  if (graph == nullptr) throw Error("GEXF: missing <graph>");

  // Attribute ids by title.
  std::map<std::string, std::string> title_of;
  for (const auto &[key, child] : *graph) {
    if (LocalName(key) != "attributes") continue;
    for (const auto &[k, attr] : child) {
      if (LocalName(k) != "attribute") continue;
      title_of[Attr(attr, "id", "attribute")] = Attr(attr, "title", "attribute");
    }
  }

  GexfDocument doc;
  std::map<std::string, int> index_of;
  if (const pt::ptree *nodes = Child(*graph, "nodes")) {
    for (const auto &[key, node] : *nodes) {
      if (LocalName(key) != "node") continue;
      const std::string id = Attr(node, "id", "node");
      const int expected = doc.graph.NodeCount();
      if (id != std::to_string(expected)) {
        throw Error("GEXF: node id '" + id + "' is not the dense index " +
                    std::to_string(expected));
      }
      std::map<std::string, std::string> values;
      if (const pt::ptree *attvalues = Child(node, "attvalues")) {
        for (const auto &[k, av] : *attvalues) {
          if (LocalName(k) != "attvalue") continue;
          std::string f = Attr(av, "for", "attvalue");
          auto title = title_of.find(f);
          values[title == title_of.end() ? f : title->second] =
              Attr(av, "value", "attvalue");
        }
      }
      auto value = [&](const std::string &title) -> std::string {
        auto it = values.find(title);
        if (it == values.end()) {
          throw Error("GEXF: node " + id + " lacks attribute " + title);
        }
        return it->second;
      };
      EntityType etype = ParseEntityType(value("type"));
      long long mentions = ParseInt(value("mentions"), "mentions");
      doc.graph.AddNode(node.get<std::string>("<xmlattr>.label", id), etype,
                        mentions);
      index_of[id] = expected;
      doc.partition.community.push_back(
          static_cast<int>(ParseInt(value("community"), "community")));
      doc.betweenness.push_back(ParseDouble(value("betweenness"), "betweenness"));
      doc.degree.push_back(static_cast<int>(ParseInt(value("degree"), "degree")));

      Point position;
      double size = 0;
      Rgb color;
      if (const pt::ptree *pos = Child(node, "position")) {
        position.x = ParseDouble(Attr(*pos, "x", "viz:position"), "x");
        position.y = ParseDouble(Attr(*pos, "y", "viz:position"), "y");
      }
      if (const pt::ptree *sz = Child(node, "size")) {
        size = ParseDouble(Attr(*sz, "value", "viz:size"), "size");
      }
      if (const pt::ptree *c = Child(node, "color")) {
        color.r = static_cast<uint8_t>(ParseInt(Attr(*c, "r", "viz:color"), "r"));
        color.g = static_cast<uint8_t>(ParseInt(Attr(*c, "g", "viz:color"), "g"));
        color.b = static_cast<uint8_t>(ParseInt(Attr(*c, "b", "viz:color"), "b"));
      }
      doc.positions.push_back(position);
      doc.sizes.push_back(size);
      doc.colors.push_back(color);
    }
  }
  if (const pt::ptree *edges = Child(*graph, "edges")) {
    for (const auto &[key, edge] : *edges) {
      if (LocalName(key) != "edge") continue;
      auto endpoint = [&](const char *name) {
        std::string ref = Attr(edge, name, "edge");
        auto it = index_of.find(ref);
        if (it == index_of.end()) {
          throw Error("GEXF: edge refers to unknown node '" + ref + "'");
        }
        return it->second;
      };
      const int s = endpoint("source");
      const int t = endpoint("target");
      const long long w = ParseInt(edge.get<std::string>("<xmlattr>.weight", "1"),
                                   "weight");
      if (doc.graph.EdgeWeight(s, t) != 0) {
        throw Error("GEXF: duplicate edge " + std::to_string(s) + "-" +
                    std::to_string(t));
      }
      doc.graph.AddEdgeWeight(s, t, w);
    }
  }
  return doc;
}

}  // namespace coocnet
