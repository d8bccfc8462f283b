#include "shtop/trace.hpp"

#include <sstream>

namespace shtop {

bool operator==(const Move& x, const Move& y) {
  return x.kind == y.kind && x.a == y.a && x.b == y.b && x.level == y.level && x.dir == y.dir;
}

Move strong_delete(std::string v, std::string w) {
  Move m;
  m.kind = MoveKind::StrongDelete;
  m.a = {std::move(v)};
  m.b = {std::move(w)};
  return m;
}

Move free_face_collapse(std::vector<std::string> sigma, std::vector<std::string> tau) {
  Move m;
  m.kind = MoveKind::FreeFaceCollapse;
  m.a = std::move(sigma);
  m.b = std::move(tau);
  return m;
}

Move ne_delete(std::string v, int level) {
  Move m;
  m.kind = MoveKind::NEDelete;
  m.a = {std::move(v)};
  m.level = level;
  return m;
}

Move beat_remove(std::string x, BeatDir dir) {
  Move m;
  m.kind = MoveKind::BeatRemove;
  m.a = {std::move(x)};
  m.dir = dir;
  return m;
}

Move weak_remove(std::string x) {
  Move m;
  m.kind = MoveKind::WeakRemove;
  m.a = {std::move(x)};
  return m;
}

std::string to_line(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::StrongDelete:
      os << "SD " << m.a[0] << " by " << m.b[0];
      break;
    case MoveKind::FreeFaceCollapse:
      os << "CC";
      for (const auto& t : m.a) os << " " << t;
      os << " |";
      for (const auto& t : m.b) os << " " << t;
      break;
    case MoveKind::NEDelete:
      os << "NE " << m.a[0] << " level " << m.level;
      break;
    case MoveKind::BeatRemove:
      os << "BR " << m.a[0] << " " << (m.dir == BeatDir::Up ? "up" : "down");
      break;
    case MoveKind::WeakRemove:
      os << "WR " << m.a[0];
      break;
  }
  return os.str();
}

}  // namespace shtop
