#pragma once

#include "conetorsion/anomaly.hpp"
#include "conetorsion/besselseq.hpp"
#include "conetorsion/decomp.hpp"
#include "conetorsion/error.hpp"
#include "conetorsion/jet.hpp"
#include "conetorsion/rational.hpp"
#include "conetorsion/specfun.hpp"
#include "conetorsion/spectra.hpp"
#include "conetorsion/summation.hpp"
#include "conetorsion/torsion.hpp"
