#pragma once

#include <string>
#include <vector>

namespace shtop {

// Which side holds the unique cover of a removed beat point.
enum class BeatDir { Down, Up };

enum class MoveKind { StrongDelete, FreeFaceCollapse, NEDelete, BeatRemove, WeakRemove };

// One certified reduction step. Vertices and poset elements are referred to
// by label so a trace survives the dense-id relabelling that deletions cause.
struct Move {
  MoveKind kind = MoveKind::StrongDelete;
  std::vector<std::string> a;  // deleted vertex / free face / removed element
  std::vector<std::string> b;  // dominator / coface
  int level = 0;               // NEDelete only
  BeatDir dir = BeatDir::Down; // BeatRemove only
};

bool operator==(const Move& x, const Move& y);

Move strong_delete(std::string v, std::string w);
Move free_face_collapse(std::vector<std::string> sigma, std::vector<std::string> tau);
Move ne_delete(std::string v, int level);
Move beat_remove(std::string x, BeatDir dir);
Move weak_remove(std::string x);

struct MoveTrace {
  std::vector<Move> moves;
};

std::string to_line(const Move& m);

}  // namespace shtop
