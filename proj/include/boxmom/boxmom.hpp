#pragma once

// Umbrella header: momentum-operator extensions on an interval, spectral
// expansions of the well states, moving-frame views, switch-off dynamics and
// the planar-oscillator sling model.

#include "boxmom/config.hpp"
#include "boxmom/extensions.hpp"
#include "boxmom/galilei.hpp"
#include "boxmom/hermite.hpp"
#include "boxmom/quadrature.hpp"
#include "boxmom/release.hpp"
#include "boxmom/series.hpp"
#include "boxmom/spectral.hpp"
#include "boxmom/well.hpp"
