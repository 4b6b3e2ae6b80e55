#pragma once

#include "cubic3dec/graph.hpp"

namespace cubic3dec::named {

Graph k4();
Graph k33();
Graph prism();
Graph petersen();
Graph cycle(int n);
Graph cube();

}  // namespace cubic3dec::named
