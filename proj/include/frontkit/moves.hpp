#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frontkit/diagram.hpp"

namespace fk {

// Where a move acts: events [e0, e1) and the strand slots s0..s1 at the left
// edge of that range (time e0). Insertions use an empty event range.
struct MoveSite {
  int e0 = 0;
  int e1 = 0;
  int s0 = 1;
  int s1 = 1;
  std::vector<ComponentId> refs;
  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// "e0..e1/s0..s1"
MoveSite parse_site(std::string_view text);
std::string to_string(const MoveSite& site);

enum class ClaspDirection { Clasp, Unclasp };
enum class StabilizeDirection { Stabilize, Destabilize };
enum class BirthDirection { Birth, Cancel };
enum class SlideVariant { MinusUp, MinusDown, PlusUp, PlusDown };
enum class ReidemeisterMove { R1, R2, R3 };
enum class RewriteDirection { Insert, Reduce };

// Local templates on a band of `width` strands, positions counted from 1.
struct LocalRule {
  std::string name;
  int width = 1;
  std::vector<Event> simple;
  std::vector<Event> expanded;
};

const LocalRule& clasp_rule();
const LocalRule& stabilize_rule();
const LocalRule& crossing_change_rule();  // simple = [X1], expanded = the changed crossing
const LocalRule& reidemeister_rule(ReidemeisterMove move, std::string_view variant);
std::vector<std::string> reidemeister_variants(ReidemeisterMove move);
const std::vector<LocalRule>& reduction_rules();  // R1 and R2 reductions used by normalize

// Replaces the sub-word at `site` (which must equal `from` on the band) by
// `to`. For spin > 0 the mirrored site is rewritten as well.
FrontDiagram rewrite_site(const FrontDiagram& d, const MoveSite& site, int width, const std::vector<Event>& from,
                          const std::vector<Event>& to, const std::string& what);

// Planar isotopy: exchange events j and j+1 when they commute.
FrontDiagram commute_at(const FrontDiagram& d, int j);

FrontDiagram uplus(const FrontDiagram& d, ComponentId a, ComponentId b, const MoveSite& at);

// Slides `moving` over `over` at the time and slots given by the site. With an
// empty event range this is the forward slide (moving directly below `over`
// for *Up, directly above for *Down); with a nonempty range that holds the
// pattern produced by the opposite variant, the slide is undone.
FrontDiagram handleslide(const FrontDiagram& d, ComponentId moving, ComponentId over, SlideVariant variant,
                         const MoveSite& at);
// Site of the band pattern created by a forward slide at `at`, in the result.
MoveSite slide_pattern_site(const FrontDiagram& before, ComponentId moving, ComponentId over, SlideVariant variant,
                            const MoveSite& at);

FrontDiagram clasp(const FrontDiagram& d, const MoveSite& site, ClaspDirection direction);
FrontDiagram stabilize(const FrontDiagram& d, ComponentId c, const MoveSite& site, StabilizeDirection direction);
// Exchanges a crossing with its changed form (spin 0 only); a one-event site
// expands, a site holding the changed form contracts.
FrontDiagram crossing_change(const FrontDiagram& d, const MoveSite& site);
FrontDiagram reidemeister(const FrontDiagram& d, ReidemeisterMove move, std::string_view variant,
                          RewriteDirection direction, const MoveSite& site);

// Birth inserts a (+1)-unknot clasped once with a new (-1)-unknot at the gap
// (site.e0, site.s0). Cancel erases site.refs = {plus, minus}.
FrontDiagram birth_cancel_pair(const FrontDiagram& d, const MoveSite& site, BirthDirection direction);

enum class TrivialBypassKind { TB1, TB2 };
// Which trivial bypass pattern the pair forms; throws naming the failed condition.
TrivialBypassKind classify_trivial_bypass(const FrontDiagram& d, ComponentId n_handle, ComponentId np1_handle);
FrontDiagram cancel_trivial_bypass(const FrontDiagram& d, ComponentId n_handle, ComponentId np1_handle);

// Adds a Legendrian push-off of component c (above or below) carrying `attr`.
FrontDiagram add_push_off(const FrontDiagram& d, ComponentId c, bool above, const ComponentAttr& attr);

// Greedy R1/R2 reductions at the leftmost-lowest site reachable by
// commutations, until none applies.
FrontDiagram normalize(const FrontDiagram& d);
// The diagram rewritten to its canonical commutation representative.
FrontDiagram canonical_form(const FrontDiagram& d);
// Heuristic: true only if both normalize to the same canonical diagram
// (labels ignored). False negatives are possible.
bool equivalent_up_to_normalization(const FrontDiagram& a, const FrontDiagram& b);

}  // namespace fk
