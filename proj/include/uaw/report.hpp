#pragma once

#include <string>
#include <vector>

namespace uaw {

/// One named verification with per-item pass/fail and the normal-form
/// residual for failures.
struct Report {
  struct Item {
    std::string item;
    bool pass;
    std::string residual;  // empty when pass
  };

  std::string name;
  std::vector<Item> items;

  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  void check(const std::string& item, bool pass, const std::string& residual = "") {
    items.push_back(Item{item, pass, pass ? "" : residual});
  }
  std::string summary() const;
};

}  // namespace uaw
