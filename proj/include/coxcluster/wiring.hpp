#pragma once

#include <string>
#include <vector>

#include "coxcluster/adapted.hpp"

namespace coxcluster {

// Pseudoline arrangement for a word in type A: n+1 strands, one column per
// letter.  A letter s_i appears as a crossing of the strands at heights
// i, i+1; a deleted letter is a tangency (the strands touch and bounce).
struct WiringDiagram {
  enum class Kind { cross, tangent };
  struct Mark {
    int column;
    int level;  // the letter
    Kind kind;
    bool circled = false;
  };

  int strands = 0;
  std::vector<Mark> marks;          // one per column, in column order
  std::vector<int> left_labels;     // label of the strand entering at height h
  std::vector<int> right_labels;    // always 1..n+1

  int crossing_count() const;
  // Levels of the crossings in column order: the word the diagram encodes.
  Word crossing_word() const;
};

bool is_type_a(const CartanData& cd);

WiringDiagram wiring_from_word(const CartanData& cd, const Word& word);

// Diagram of the full j-sequence with the selected letters as tangencies.
// When the selection is a cluster, the projective positions are circled
// (extending into the rho-twisted continuation if they wrap).
WiringDiagram wiring_for_selection(const AdaptedFrame& frame,
                                   const Selection& sel);

// Diagram of the w0 part alone, all crossings.
WiringDiagram wiring_w0(const AdaptedFrame& frame);

// Renderer-independent listing (one mark per line plus margins) used for
// golden comparisons.
std::string geometry_listing(const WiringDiagram& d);

std::string wiring_svg(const WiringDiagram& d);

}  // namespace coxcluster
