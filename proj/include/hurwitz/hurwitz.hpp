#pragma once

#include "hurwitz/calculus.hpp"
#include "hurwitz/checks.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/interlace.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/ode.hpp"
#include "hurwitz/rings.hpp"
#include "hurwitz/series.hpp"
