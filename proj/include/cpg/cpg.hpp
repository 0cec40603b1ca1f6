#pragma once

// Umbrella header.

#include "abelian.hpp"
#include "classification.hpp"
#include "conjugacy.hpp"
#include "coset_table.hpp"
#include "families.hpp"
#include "finite_group.hpp"
#include "hat_group.hpp"
#include "log.hpp"
#include "parse.hpp"
#include "presentation.hpp"
#include "star_graph.hpp"
#include "survey.hpp"
#include "transforms.hpp"
#include "two_gen.hpp"
#include "word.hpp"
