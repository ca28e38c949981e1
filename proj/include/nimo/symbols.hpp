#ifndef NIMO_SYMBOLS_HPP
#define NIMO_SYMBOLS_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "numeric.hpp"

namespace nimo {

// Generators of the coefficient ring. x, y and the radical r (r^2 = x^2+y^2)
// are built in; params and jets are interned on first use. Ordering is
// structural (kind, then name/indices), never insertion order, so monomial
// order is stable across runs: x > y > r > params > jets, graded-lex.
using VarId = std::uint32_t;

enum class VarKind : std::uint8_t { X = 0, Y = 1, R = 2, Param = 3, Jet = 4 };

struct VarData {
  VarKind kind;
  std::string name;  // param name, or jet function id
  int dx = 0, dy = 0;  // jet orders
};

class SymTab {
 public:
  static SymTab& instance() {
    static SymTab t;
    return t;
  }

  VarId x() const { return 0; }
  VarId y() const { return 1; }
  VarId r() const { return 2; }

  VarId param(const std::string& name) {
    if (name == "x" || name == "y" || name == "r" || name == "i" || name == "D")
      throw error("reserved identifier cannot be a param: " + name);
    return intern(VarData{VarKind::Param, name, 0, 0});
  }
  VarId hbar() { return intern(VarData{VarKind::Param, "hbar", 0, 0}); }
  VarId jet(const std::string& fid, int dx, int dy) {
    if (dx < 0 || dy < 0) throw error("negative jet order");
    return intern(VarData{VarKind::Jet, fid, dx, dy});
  }

  const VarData& data(VarId v) const { return tab_[v]; }

  // total order; true if a is "more significant" than b (a before b)
  bool before(VarId a, VarId b) const {
    if (a == b) return false;
    const VarData& da = tab_[a];
    const VarData& db = tab_[b];
    auto ka = std::tie(da.kind, da.name, da.dx, da.dy);
    auto kb = std::tie(db.kind, db.name, db.dx, db.dy);
    return ka < kb;
  }

 private:
  SymTab() {
    tab_.push_back({VarKind::X, "x", 0, 0});
    tab_.push_back({VarKind::Y, "y", 0, 0});
    tab_.push_back({VarKind::R, "r", 0, 0});
  }
  VarId intern(const VarData& d) {
    std::lock_guard<std::mutex> lk(mu_);
    auto key = std::tie(d.kind, d.name, d.dx, d.dy);
    auto it = index_.find(std::make_tuple(d.kind, d.name, d.dx, d.dy));
    if (it != index_.end()) return it->second;
    VarId id = static_cast<VarId>(tab_.size());
    tab_.push_back(d);
    index_.emplace(std::make_tuple(d.kind, d.name, d.dx, d.dy), id);
    return id;
  }

  mutable std::mutex mu_;
  std::deque<VarData> tab_;  // deque: stable element addresses under growth
  std::map<std::tuple<VarKind, std::string, int, int>, VarId> index_;
};

inline VarId var_x() { return SymTab::instance().x(); }
inline VarId var_y() { return SymTab::instance().y(); }
inline VarId var_r() { return SymTab::instance().r(); }
inline VarId var_hbar() { return SymTab::instance().hbar(); }
inline VarId var_param(const std::string& n) { return SymTab::instance().param(n); }
inline VarId var_jet(const std::string& f, int dx, int dy) { return SymTab::instance().jet(f, dx, dy); }
inline bool var_before(VarId a, VarId b) { return SymTab::instance().before(a, b); }

inline std::string var_name(VarId v) {
  const VarData& d = SymTab::instance().data(v);
  switch (d.kind) {
    case VarKind::X: return "x";
    case VarKind::Y: return "y";
    case VarKind::R: return "r";
    case VarKind::Param: return d.name;
    case VarKind::Jet: {
      return "D[" + d.name + "," + std::to_string(d.dx) + "," + std::to_string(d.dy) + "]";
    }
  }
  return "?";
}

}  // namespace nimo

#endif
